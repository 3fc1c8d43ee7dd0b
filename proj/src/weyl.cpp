#include "torus_git/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <string>

namespace torus_git::weyl {

EnumerationLimitExceeded::EnumerationLimitExceeded(std::uint64_t order, std::size_t limit)
    : std::runtime_error("Weyl group has " + std::to_string(order) + " elements, above the enumeration limit of " +
                         std::to_string(limit) + " (raise TORUS_GIT_MAX_WEYL to override)"),
      order_(order) {}

std::size_t default_weyl_limit() {
    if (const char* env = std::getenv("TORUS_GIT_MAX_WEYL")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return kDefaultWeylLimit;
}

std::uint64_t weyl_order(const RootDatum& d) {
    const std::uint64_t n = d.rank();
    auto factorial = [](std::uint64_t k) {
        std::uint64_t f = 1;
        for (std::uint64_t i = 2; i <= k; ++i) f *= i;
        return f;
    };
    switch (d.type()) {
    case rootsys::SimpleType::A: return factorial(n + 1);
    case rootsys::SimpleType::B:
    case rootsys::SimpleType::C: return (std::uint64_t{1} << n) * factorial(n);
    case rootsys::SimpleType::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
    case rootsys::SimpleType::E: return n == 6 ? 51840 : n == 7 ? 2903040 : 696729600;
    case rootsys::SimpleType::F: return 1152;
    case rootsys::SimpleType::G: return 12;
    }
    return 0;
}

namespace {

IntVector identity_action(std::size_t n) {
    IntVector m(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

// Action matrix of s_i on ω-coordinates: column i is replaced by e_i - α_i.
IntVector reflection_action(const RootDatum& d, std::size_t i) {
    const std::size_t n = d.rank();
    IntVector m = identity_action(n);
    for (std::size_t r = 0; r < n; ++r) m[r * n + i] -= d.cartan()[r][i];
    return m;
}

IntVector multiply(const IntVector& a, const IntVector& b, std::size_t n) {
    IntVector c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::int64_t aik = a[i * n + k];
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

// w(ρ) in ω-coordinates: row sums of the action matrix.
IntVector rho_image(const IntVector& action, std::size_t n) {
    IntVector v(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) v[i] += action[i * n + j];
    return v;
}

}  // namespace

WeylElement identity_element(const RootDatum& d) { return WeylElement{identity_action(d.rank()), 0, {}}; }

WeylElement simple_reflection(const RootDatum& d, std::size_t i) {
    if (i >= d.rank()) throw std::out_of_range("simple reflection index out of range");
    return WeylElement{reflection_action(d, i), 1, {i}};
}

WeylElement compose(const RootDatum& d, const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    c.action = multiply(a.action, b.action, d.rank());
    c.reduced_word = a.reduced_word;
    c.reduced_word.insert(c.reduced_word.end(), b.reduced_word.begin(), b.reduced_word.end());
    c.length = inversion_count(d, c);
    return c;
}

std::size_t inversion_count(const RootDatum& d, const WeylElement& w) {
    const std::size_t n = d.rank();
    const IntVector& h = d.scaled_height_row();
    std::size_t count = 0;
    for (const auto& beta : d.positive_roots()) {
        const Weight image = act_on_weight(w, d.from_alpha(beta));
        std::int64_t scaled_height = 0;
        for (std::size_t j = 0; j < n; ++j) scaled_height += h[j] * image.omega[j];
        if (scaled_height < 0) ++count;
    }
    return count;
}

Weight act_on_weight(const WeylElement& w, const Weight& psi) {
    const std::size_t n = psi.rank();
    if (w.action.size() != n * n) throw ratlp::DimensionMismatch("Weyl element and weight ranks differ");
    Weight out{IntVector(n, 0)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.omega[i] += w.action[i * n + j] * psi.omega[j];
    return out;
}

Coweight act_on_coweight(const RootDatum& d, const WeylElement& w, const Coweight& lambda) {
    const std::size_t n = d.rank();
    if (lambda.rank() != n) throw ratlp::DimensionMismatch("coweight rank does not match root datum");
    Coweight c = lambda;
    for (auto it = w.reduced_word.rbegin(); it != w.reduced_word.rend(); ++it) {
        const std::size_t i = *it;
        const std::int64_t k = c.lambda[i];  // <α_i, λ>
        if (k == 0) continue;
        // α_i^∨ has λ-coordinates <α_j, α_i^∨> = cartan[i][j].
        for (std::size_t j = 0; j < n; ++j) c.lambda[j] -= k * d.cartan()[i][j];
    }
    return c;
}

std::vector<Weight> weyl_orbit(const RootDatum& d, const Weight& psi) {
    std::set<Weight> seen{psi};
    std::deque<Weight> queue{psi};
    while (!queue.empty()) {
        const Weight cur = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < d.rank(); ++i) {
            Weight next = rootsys::reflect(d, cur, i);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    return {seen.begin(), seen.end()};
}

WeylGroup WeylGroup::enumerate(const RootDatum& d, std::size_t limit) {
    const std::uint64_t order = weyl_order(d);
    if (order > limit) throw EnumerationLimitExceeded(order, limit);

    WeylGroup g;
    g.datum_ = d;
    const std::size_t n = d.rank();
    std::vector<IntVector> reflections;
    for (std::size_t i = 0; i < n; ++i) reflections.push_back(reflection_action(d, i));

    g.elements_.reserve(order);
    g.elements_.push_back(identity_element(d));
    g.by_rho_image_.emplace(rho_image(g.elements_[0].action, n), 0);
    // Breadth-first closure under right multiplication. Parents are visited
    // in (length, lex word) order and letters ascending, so the first word
    // reaching an element is its lex-smallest reduced word.
    for (std::size_t head = 0; head < g.elements_.size(); ++head) {
        for (std::size_t i = 0; i < n; ++i) {
            IntVector action = multiply(g.elements_[head].action, reflections[i], n);
            IntVector key = rho_image(action, n);
            if (g.by_rho_image_.contains(key)) continue;
            WeylElement w;
            w.action = std::move(action);
            w.reduced_word = g.elements_[head].reduced_word;
            w.reduced_word.push_back(i);
            w.length = w.reduced_word.size();
            g.by_rho_image_.emplace(std::move(key), g.elements_.size());
            g.elements_.push_back(std::move(w));
        }
    }
    if (g.elements_.size() != order)
        throw std::logic_error("Weyl enumeration produced " + std::to_string(g.elements_.size()) +
                               " elements, expected " + std::to_string(order));

    g.inverse_.resize(g.elements_.size());
    for (std::size_t k = 0; k < g.elements_.size(); ++k) {
        WeylElement inv = identity_element(d);
        const auto& word = g.elements_[k].reduced_word;
        for (auto it = word.rbegin(); it != word.rend(); ++it) inv.action = multiply(inv.action, reflections[*it], n);
        g.inverse_[k] = g.by_rho_image_.at(rho_image(inv.action, n));
    }
    return g;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
    const auto it = by_rho_image_.find(rho_image(w.action, datum_.rank()));
    if (it == by_rho_image_.end()) throw std::out_of_range("element not in Weyl group");
    return it->second;
}

std::size_t WeylGroup::product_index(std::size_t a, std::size_t b) const {
    const std::size_t n = datum_.rank();
    return by_rho_image_.at(rho_image(multiply(elements_[a].action, elements_[b].action, n), n));
}

WeylElement longest_element(const RootDatum& d, std::size_t limit) { return WeylGroup::enumerate(d, limit).longest(); }

std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::size_t limit) {
    return WeylGroup::enumerate(d, limit).elements();
}

rootsys::Rational pairing_with_translated_coweight(const WeylGroup& g, std::size_t w_index, const Weight& chi,
                                                   std::size_t i) {
    const Weight image = act_on_weight(g[g.inverse_index(w_index)], chi);
    return rootsys::alpha_coords(g.datum(), image).at(i);
}

}  // namespace torus_git::weyl
