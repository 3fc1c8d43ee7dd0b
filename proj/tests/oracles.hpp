// Brute-force reference implementations used to cross-check the library.
// None of them calls the LP or the Weyl-group code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "torus_git/rational.hpp"

namespace oracle {

using torus_git::ratlp::Rational;
using torus_git::ratlp::RatVector;
using Matrix = std::vector<RatVector>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x = x * inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || m[k][c].is_zero()) continue;
            const Rational f = m[k][c];
            for (std::size_t j = 0; j < cols; ++j) m[k][j] = m[k][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank_of(Matrix m) { return rref(m).size(); }

/// Unique solution of M x = b, if there is exactly one.
inline std::optional<RatVector> solve_unique(const Matrix& m, const RatVector& b) {
    const std::size_t n = m.empty() ? 0 : m[0].size();
    Matrix aug = m;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    const auto piv = rref(aug);
    if (!piv.empty() && piv.back() == n) return std::nullopt;  // inconsistent
    if (piv.size() != n) return std::nullopt;                  // not unique
    RatVector x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) x[piv[i]] = aug[i][n];
    return x;
}

/// One basis vector of the null space of m (rows × d, rank d - 1).
inline RatVector kernel_vector(Matrix m, std::size_t d) {
    const auto piv = rref(m);
    std::size_t free = 0;
    while (std::find(piv.begin(), piv.end(), free) != piv.end()) ++free;
    RatVector v(d, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][free];
    return v;
}

template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k > n) return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

/// Carathéodory: target ∈ conv(points) iff it is a convex combination of
/// some affinely independent subset of at most d + 1 points.
inline bool caratheodory_inside(const std::vector<RatVector>& points, const RatVector& target) {
    const std::size_t d = target.size();
    bool inside = false;
    for (std::size_t k = 1; k <= std::min(points.size(), d + 1) && !inside; ++k)
        for_each_subset(points.size(), k, [&](const std::vector<std::size_t>& s) {
            if (inside) return;
            Matrix m(d + 1, RatVector(k, Rational(0)));
            for (std::size_t c = 0; c < k; ++c) {
                for (std::size_t r = 0; r < d; ++r) m[r][c] = points[s[c]][r];
                m[d][c] = 1;
            }
            RatVector b = target;
            b.push_back(Rational(1));
            const auto x = solve_unique(m, b);
            if (x && std::all_of(x->begin(), x->end(), [](const Rational& v) { return v.sign() >= 0; })) inside = true;
        });
    return inside;
}

/// Interior via facet enumeration: the polytope must be full-dimensional and
/// the target strictly inside every supporting hyperplane through d points.
inline bool facet_interior(const std::vector<RatVector>& points, const RatVector& target) {
    const std::size_t d = target.size();
    if (points.empty()) return false;
    Matrix diffs;
    for (const auto& p : points) {
        RatVector v(d);
        for (std::size_t j = 0; j < d; ++j) v[j] = p[j] - points[0][j];
        diffs.push_back(v);
    }
    if (rank_of(diffs) < d) return false;
    bool interior = true;
    for_each_subset(points.size(), d, [&](const std::vector<std::size_t>& s) {
        if (!interior) return;
        Matrix m;
        for (std::size_t k = 1; k < s.size(); ++k) {
            RatVector v(d);
            for (std::size_t j = 0; j < d; ++j) v[j] = points[s[k]][j] - points[s[0]][j];
            m.push_back(v);
        }
        if (d > 1 && rank_of(m) != d - 1) return;
        const RatVector n = d > 1 ? kernel_vector(m, d) : RatVector{Rational(1)};
        auto side = [&](const RatVector& p) {
            Rational acc(0);
            for (std::size_t j = 0; j < d; ++j) acc = acc + n[j] * (p[j] - points[s[0]][j]);
            return acc.sign();
        };
        bool pos = true, neg = true;
        for (const auto& p : points) {
            const int sg = side(p);
            pos = pos && sg >= 0;
            neg = neg && sg <= 0;
        }
        if (!pos && !neg) return;  // not supporting
        const int t = side(target);
        if ((pos && t <= 0) || (neg && t >= 0)) interior = false;
    });
    return interior;
}

enum class Kind { Unstable, SemistableNotStable, Stable };

/// Hilbert–Mumford classification of a state by the two geometric oracles.
inline Kind classify(const std::vector<RatVector>& points) {
    const RatVector origin(points.front().size(), Rational(0));
    if (!caratheodory_inside(points, origin)) return Kind::Unstable;
    return facet_interior(points, origin) ? Kind::Stable : Kind::SemistableNotStable;
}

// ---------------------------------------------------------------- type A

/// ε-coordinates of a type-A_n weight given in ω-coordinates, scaled by n + 1
/// so that they are integers summing to zero.
inline std::vector<std::int64_t> scaled_epsilon(const std::vector<std::int64_t>& omega) {
    const std::size_t n = omega.size();
    std::vector<std::int64_t> e(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) e[i] += omega[j];
    const std::int64_t total = std::accumulate(e.begin(), e.end(), std::int64_t{0});
    for (auto& x : e) x = static_cast<std::int64_t>(n + 1) * x - total;
    return e;
}

/// All weights of V(χ) for type A_n: integer ε-vectors in the coset of χ whose
/// sorted form is dominated by χ. Returned in ω-coordinates.
inline std::set<std::vector<std::int64_t>> type_a_support(const std::vector<std::int64_t>& omega) {
    const std::size_t n = omega.size();
    std::vector<std::int64_t> lambda(n + 1, 0);  // partition
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) lambda[i] += omega[j];
    const std::int64_t size = std::accumulate(lambda.begin(), lambda.end(), std::int64_t{0});
    std::set<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> v(n + 1, 0);
    for (;;) {
        if (std::accumulate(v.begin(), v.end(), std::int64_t{0}) == size) {
            auto s = v;
            std::sort(s.rbegin(), s.rend());
            bool dominated = true;
            std::int64_t a = 0, b = 0;
            for (std::size_t i = 0; i <= n; ++i) {
                a += s[i];
                b += lambda[i];
                dominated = dominated && a <= b;
            }
            if (dominated) {
                std::vector<std::int64_t> w(n);
                for (std::size_t i = 0; i < n; ++i) w[i] = v[i] - v[i + 1];
                out.insert(w);
            }
        }
        std::size_t k = 0;
        while (k <= n && v[k] == lambda[0]) v[k++] = 0;
        if (k > n) break;
        ++v[k];
    }
    return out;
}

struct Lemma1 {
    bool in_ns = false, regular_dominant = false, reflections_nonneg = false, pairings_nonzero = false;
    std::size_t permutations_checked = 0;
    bool passes() const { return in_ns && regular_dominant && reflections_nonneg && pairings_nonzero; }
};

/// The four conditions for type A_n, with W = S_{n+1} acting on ε-coordinates
/// by permutation. Every permutation is visited.
inline Lemma1 type_a_lemma1(const std::vector<std::int64_t>& omega) {
    const std::size_t n = omega.size();
    const auto m = static_cast<std::int64_t>(n + 1);
    const auto e = scaled_epsilon(omega);
    // α-coordinates are partial sums of ε divided by n + 1.
    auto nonneg_integral = [&](const std::vector<std::int64_t>& v) {
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += v[k];
            if (acc < 0 || acc % m != 0) return false;
        }
        return true;
    };
    Lemma1 r;
    r.in_ns = nonneg_integral(e);
    r.regular_dominant = std::all_of(omega.begin(), omega.end(), [](std::int64_t x) { return x > 0; });
    r.reflections_nonneg = true;
    for (std::size_t i = 0; i < n; ++i) {
        auto s = e;
        std::swap(s[i], s[i + 1]);
        std::int64_t acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
            acc += s[k];
            if (acc < 0) r.reflections_nonneg = false;
        }
    }
    r.pairings_nonzero = true;
    std::vector<std::size_t> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++r.permutations_checked;
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += e[perm[i]];
            if (acc == 0) r.pairings_nonzero = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return r;
}

}  // namespace oracle
