#include "torus_git/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "torus_git/weyl.hpp"

namespace torus_git::rootsys {

char type_letter(SimpleType t) { return static_cast<char>('A' + static_cast<int>(t)); }

SimpleType parse_type(char letter) {
    if (letter >= 'a' && letter <= 'g') letter = static_cast<char>(letter - 'a' + 'A');
    if (letter < 'A' || letter > 'G') throw InvalidRootDatum(std::string("unknown root system type '") + letter + "'");
    return static_cast<SimpleType>(letter - 'A');
}

bool Weight::is_zero() const {
    return std::all_of(omega.begin(), omega.end(), [](std::int64_t v) { return v == 0; });
}

bool Weight::is_dominant() const {
    return std::all_of(omega.begin(), omega.end(), [](std::int64_t v) { return v >= 0; });
}

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& v : r.omega) v = -v;
    return r;
}

Weight operator+(const Weight& a, const Weight& b) {
    Weight r = a;
    for (std::size_t i = 0; i < r.omega.size(); ++i) r.omega[i] += b.omega.at(i);
    return r;
}

Weight operator-(const Weight& a, const Weight& b) { return a + (-b); }

Weight operator*(std::int64_t k, const Weight& a) {
    Weight r = a;
    for (auto& v : r.omega) v *= k;
    return r;
}

bool Coweight::is_zero() const {
    return std::all_of(lambda.begin(), lambda.end(), [](std::int64_t v) { return v == 0; });
}

std::string RootDatum::label() const { return std::string(1, type_letter(type_)) + std::to_string(rank_); }

Weight RootDatum::simple_root(std::size_t i) const {
    Weight w{IntVector(rank_)};
    for (std::size_t k = 0; k < rank_; ++k) w.omega[k] = cartan_[k][i];
    return w;
}

Weight RootDatum::fundamental_weight(std::size_t i) const {
    Weight w{IntVector(rank_)};
    w.omega.at(i) = 1;
    return w;
}

Weight RootDatum::from_alpha(const IntVector& alpha) const {
    if (alpha.size() != rank_) throw ratlp::DimensionMismatch("α-coordinate vector has wrong length");
    Weight w{IntVector(rank_)};
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) w.omega[i] += cartan_[i][j] * alpha[j];
    return w;
}

IntVector RootDatum::scaled_alpha(const Weight& w) const {
    if (w.rank() != rank_) throw ratlp::DimensionMismatch("weight rank does not match root datum");
    IntVector out(rank_, 0);
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j) out[i] += scaled_inverse_[i][j] * w.omega[j];
    return out;
}

namespace {

std::vector<IntVector> cartan_matrix(SimpleType type, std::size_t n) {
    std::vector<IntVector> a(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) a[i][i] = 2;
    auto link = [&](std::size_t i, std::size_t j) {  // 1-based, simply laced edge
        a[i - 1][j - 1] = -1;
        a[j - 1][i - 1] = -1;
    };
    switch (type) {
    case SimpleType::A:
        for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
        break;
    case SimpleType::B:  // α_n short
        for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
        a[n - 1][n - 2] = -2;
        break;
    case SimpleType::C:  // α_n long
        for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
        a[n - 2][n - 1] = -2;
        break;
    case SimpleType::D:
        for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case SimpleType::E:
        link(1, 3);
        link(3, 4);
        link(2, 4);
        for (std::size_t i = 4; i < n; ++i) link(i, i + 1);
        break;
    case SimpleType::F:  // α_1, α_2 long; α_3, α_4 short
        link(1, 2);
        link(3, 4);
        a[1][2] = -1;
        a[2][1] = -2;
        break;
    case SimpleType::G:  // α_1 short, α_2 long
        a[0][1] = -3;
        a[1][0] = -1;
        break;
    }
    return a;
}

bool valid_rank(SimpleType type, std::size_t n) {
    switch (type) {
    case SimpleType::A: return n >= 1;
    case SimpleType::B: return n >= 2;
    case SimpleType::C: return n >= 2;
    case SimpleType::D: return n >= 4;
    case SimpleType::E: return n >= 6 && n <= 8;
    case SimpleType::F: return n == 4;
    case SimpleType::G: return n == 2;
    }
    return false;
}

}  // namespace

RootDatum build_root_datum(SimpleType type, std::size_t rank) {
    if (!valid_rank(type, rank))
        throw InvalidRootDatum(std::string("invalid simple type ") + type_letter(type) + std::to_string(rank));
    RootDatum d;
    d.type_ = type;
    d.rank_ = rank;
    d.cartan_ = cartan_matrix(type, rank);
    const RatMatrix c = RatMatrix::from_integers(d.cartan_);
    d.inverse_cartan_ = ratlp::invert_matrix(c);
    d.determinant_ = ratlp::determinant(c).to_int64();

    d.scaled_inverse_.assign(rank, IntVector(rank, 0));
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j)
            d.scaled_inverse_[i][j] = (d.inverse_cartan_(i, j) * Rational(d.determinant_)).to_int64();

    d.height_row_.assign(rank, 0);
    for (std::size_t j = 0; j < rank; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < rank; ++i) s += d.inverse_cartan_(i, j);
        d.height_row_[j] = (s * Rational(d.determinant_)).to_int64();
    }

    // Close the simple roots under simple reflections, keeping positive roots.
    std::set<IntVector> roots;
    std::deque<IntVector> queue;
    for (std::size_t i = 0; i < rank; ++i) {
        IntVector e(rank, 0);
        e[i] = 1;
        roots.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        const IntVector beta = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < rank; ++i) {
            std::int64_t coroot_pairing = 0;  // <β, α_i^∨>
            for (std::size_t j = 0; j < rank; ++j) coroot_pairing += d.cartan_[i][j] * beta[j];
            IntVector image = beta;
            image[i] -= coroot_pairing;
            if (std::any_of(image.begin(), image.end(), [](std::int64_t v) { return v < 0; })) continue;
            if (roots.insert(image).second) queue.push_back(image);
        }
    }
    d.positive_roots_.assign(roots.begin(), roots.end());
    std::stable_sort(d.positive_roots_.begin(), d.positive_roots_.end(), [](const IntVector& x, const IntVector& y) {
        std::int64_t hx = 0, hy = 0;
        for (auto v : x) hx += v;
        for (auto v : y) hy += v;
        if (hx != hy) return hx < hy;
        return x > y;
    });
    return d;
}

RatVector alpha_coords(const RootDatum& d, const Weight& w) {
    if (w.rank() != d.rank()) throw ratlp::DimensionMismatch("weight rank does not match root datum");
    RatVector omega(w.omega.begin(), w.omega.end());
    return d.inverse_cartan().apply(omega);
}

Rational height(const RootDatum& d, const Weight& w) {
    Rational h = 0;
    for (const auto& x : alpha_coords(d, w)) h += x;
    return h;
}

bool in_root_lattice(const RootDatum& d, const Weight& w) {
    const RatVector a = alpha_coords(d, w);
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_integer(); });
}

IntVector integral_alpha_coords(const RootDatum& d, const Weight& w) {
    IntVector out;
    for (const auto& x : alpha_coords(d, w)) {
        if (!x.is_integer()) throw NotInRootLattice("weight is not in the root lattice");
        out.push_back(x.to_int64());
    }
    return out;
}

Rational pairing(const RootDatum& d, const Weight& w, const Coweight& c) {
    if (c.rank() != d.rank()) throw ratlp::DimensionMismatch("coweight rank does not match root datum");
    const RatVector a = alpha_coords(d, w);
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (c.lambda[i] != 0) s += a[i] * Rational(c.lambda[i]);
    return s;
}

Dominance dominance_leq(const RootDatum& d, const Weight& w1, const Weight& w2) {
    bool integral = true;
    for (const auto& x : alpha_coords(d, w2 - w1)) {
        if (x.sign() < 0) return Dominance::False;
        integral = integral && x.is_integer();
    }
    return integral ? Dominance::True : Dominance::NonIntegral;
}

Weight two_rho(const RootDatum& d) {
    IntVector sum(d.rank(), 0);
    for (const auto& beta : d.positive_roots())
        for (std::size_t i = 0; i < d.rank(); ++i) sum[i] += beta[i];
    return d.from_alpha(sum);
}

bool is_regular_dominant(const Weight& w) {
    return std::all_of(w.omega.begin(), w.omega.end(), [](std::int64_t v) { return v > 0; });
}

Weight reflect(const RootDatum& d, const Weight& w, std::size_t i) {
    if (i >= d.rank()) throw std::out_of_range("simple reflection index out of range");
    Weight r = w;
    const std::int64_t k = w.omega[i];
    if (k == 0) return r;
    for (std::size_t j = 0; j < d.rank(); ++j) r.omega[j] -= k * d.cartan()[j][i];
    return r;
}

std::vector<Weight> dominant_weights_leq(const RootDatum& d, const Weight& chi) {
    if (!chi.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
    const IntVector top = integral_alpha_coords(d, chi);
    const std::size_t n = d.rank();
    std::vector<Weight> out;
    // Odometer over the α-coordinate box [0, top_i] of χ - ν.
    IntVector step(n, 0);
    for (;;) {
        Weight nu = chi - d.from_alpha(step);
        if (nu.is_dominant()) out.push_back(std::move(nu));
        std::size_t k = 0;
        while (k < n && step[k] == top[k]) step[k++] = 0;
        if (k == n) break;
        ++step[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Weight> weight_support(const RootDatum& d, const Weight& chi) {
    std::vector<Weight> out;
    for (const auto& nu : dominant_weights_leq(d, chi)) {
        const auto orbit = weyl::weyl_orbit(d, nu);
        out.insert(out.end(), orbit.begin(), orbit.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace torus_git::rootsys
