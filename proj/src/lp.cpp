#include "torus_git/lp.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace torus_git::ratlp {

namespace {

constexpr std::size_t kNoRow = std::numeric_limits<std::size_t>::max();

// Revised phase-1 simplex. Rows with negative right-hand side are negated
// so the artificial basis is feasible; column n + r is the artificial of
// row r. Only the m×m basis inverse is stored and columns are priced on
// demand, so the cost per pivot is O(m²) plus the Bland scan.
class RevisedSimplex {
public:
    RevisedSimplex(const RatMatrix& a, const RatVector& b)
        : a_(a), m_(a.rows()), n_(a.cols()), sign_(m_, 1), basis_(m_), binv_(m_ * m_), xb_(m_), y_(m_) {
        for (std::size_t r = 0; r < m_; ++r) {
            sign_[r] = b[r].sign() < 0 ? -1 : 1;
            xb_[r] = sign_[r] < 0 ? mpq_class(-b[r].raw()) : b[r].raw();
            basis_[r] = n_ + r;
            inv(r, r) = 1;
        }
        prepare_integer_columns();
        update_duals();
    }

    std::size_t run() {
        std::size_t pivots = 0;
        std::vector<mpq_class> column(m_);
        for (;;) {
            // Bland: lowest-index column with negative reduced cost.
            std::size_t enter = kNoRow;
            for (std::size_t j = 0; j < n_ + m_ && enter == kNoRow; ++j)
                if (reduced_cost_sign(j) < 0) enter = j;
            if (enter == kNoRow) return pivots;

            for (std::size_t r = 0; r < m_; ++r) {
                column[r] = 0;
                for (std::size_t k = 0; k < m_; ++k) {
                    if (sgn(inv(r, k)) == 0) continue;
                    const mpq_class e = entry(k, enter);
                    if (sgn(e) != 0) column[r] += inv(r, k) * e;
                }
            }
            // Ratio test; ties go to the lowest basic variable index.
            std::size_t leave = kNoRow;
            mpq_class best;
            for (std::size_t r = 0; r < m_; ++r) {
                if (sgn(column[r]) <= 0) continue;
                mpq_class ratio = xb_[r] / column[r];
                if (leave == kNoRow || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            // The phase-1 objective is bounded below by zero.
            if (leave == kNoRow) throw std::logic_error("phase-1 simplex reported unbounded");
            pivot(leave, enter, column);
            ++pivots;
        }
    }

    bool feasible() const {
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] >= n_ && sgn(xb_[r]) != 0) return false;
        return true;
    }

    RatVector solution() const {
        RatVector x(n_);
        for (std::size_t r = 0; r < m_; ++r)
            if (basis_[r] < n_) x[basis_[r]] = Rational(xb_[r]);
        return x;
    }

    // At a positive optimum the duals y satisfy yᵀA' <= 0 and yᵀb' > 0 for
    // the sign-adjusted system; z = -y with the row negation undone is the
    // certificate for A, b.
    RatVector farkas() const {
        RatVector z(m_);
        for (std::size_t r = 0; r < m_; ++r) z[r] = Rational(mpq_class(sign_[r] < 0 ? y_[r] : mpq_class(-y_[r])));
        return z;
    }

private:
    mpq_class& inv(std::size_t r, std::size_t c) { return binv_[r * m_ + c]; }
    const mpq_class& inv(std::size_t r, std::size_t c) const { return binv_[r * m_ + c]; }

    // Entry (r, j) of the sign-adjusted matrix [A' | I].
    mpq_class entry(std::size_t r, std::size_t j) const {
        if (j >= n_) return j - n_ == r ? 1 : 0;
        const mpq_class& v = a_(r, j).raw();
        return sign_[r] < 0 ? mpq_class(-v) : v;
    }

    // Column-major copy of A when every entry is an integer of moderate size.
    void prepare_integer_columns() {
        int_cols_.assign(n_ * m_, 0);
        for (std::size_t j = 0; j < n_; ++j)
            for (std::size_t r = 0; r < m_; ++r) {
                const Rational& v = a_(r, j);
                if (!v.is_integer() || !v.numerator().fits_sint_p()) {
                    int_cols_.clear();
                    return;
                }
                int_cols_[j * m_ + r] = sign_[r] * v.numerator().get_si();
            }
    }

    int reduced_cost_sign(std::size_t j) const {
        if (j >= n_) return sgn(mpq_class(1 - y_[j - n_]));
        if (!scaled_y_.empty() && !int_cols_.empty()) {
            // |ŷ_r| < 2^63 and |a| < 2^31, so each product fits in 94 bits.
            __int128 acc = 0;
            const std::int64_t* col = &int_cols_[j * m_];
            for (std::size_t r = 0; r < m_; ++r) acc += static_cast<__int128>(scaled_y_[r]) * col[r];
            return acc > 0 ? -1 : acc < 0 ? 1 : 0;
        }
        return sgn(reduced_cost(j));
    }

    mpq_class reduced_cost(std::size_t j) const {
        if (j >= n_) return 1 - y_[j - n_];
        mpq_class acc = 0;
        for (std::size_t r = 0; r < m_; ++r) {
            if (sgn(y_[r]) == 0) continue;
            const mpq_class& v = a_(r, j).raw();
            if (sgn(v) == 0) continue;
            if (sign_[r] < 0)
                acc += y_[r] * v;
            else
                acc -= y_[r] * v;
        }
        return acc;
    }

    // y = c_Bᵀ B⁻¹ with phase-1 costs (1 on artificials).
    void update_duals() {
        for (std::size_t c = 0; c < m_; ++c) {
            mpq_class acc = 0;
            for (std::size_t r = 0; r < m_; ++r)
                if (basis_[r] >= n_ && sgn(inv(r, c)) != 0) acc += inv(r, c);
            y_[c] = std::move(acc);
        }
        // ŷ = y · lcm(denominators), kept only when it fits in 63 bits.
        mpz_class den = 1;
        for (const auto& v : y_) den = lcm(den, v.get_den());
        scaled_y_.assign(m_, 0);
        for (std::size_t r = 0; r < m_; ++r) {
            const mpz_class v = y_[r].get_num() * (den / y_[r].get_den());
            if (!v.fits_slong_p()) {
                scaled_y_.clear();
                return;
            }
            scaled_y_[r] = v.get_si();
        }
    }

    void pivot(std::size_t row, std::size_t col, const std::vector<mpq_class>& column) {
        const mpq_class p = column[row];
        for (std::size_t c = 0; c < m_; ++c)
            if (sgn(inv(row, c)) != 0) inv(row, c) /= p;
        xb_[row] /= p;
        for (std::size_t r = 0; r < m_; ++r) {
            if (r == row || sgn(column[r]) == 0) continue;
            const mpq_class& f = column[r];
            for (std::size_t c = 0; c < m_; ++c)
                if (sgn(inv(row, c)) != 0) inv(r, c) -= f * inv(row, c);
            xb_[r] -= f * xb_[row];
        }
        basis_[row] = col;
        update_duals();
    }

    const RatMatrix& a_;
    std::size_t m_;
    std::size_t n_;
    std::vector<int> sign_;
    std::vector<std::size_t> basis_;
    std::vector<mpq_class> binv_;
    std::vector<mpq_class> xb_;
    std::vector<mpq_class> y_;
    std::vector<std::int64_t> scaled_y_;
    std::vector<std::int64_t> int_cols_;
};

void check_points(const std::vector<RatVector>& points, const RatVector& target) {
    if (points.empty()) throw DimensionMismatch("point set is empty");
    for (const auto& p : points)
        if (p.size() != target.size()) throw DimensionMismatch("point and target dimensions differ");
}

RatVector difference(const RatVector& a, const RatVector& b) {
    RatVector d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// Columns p - target.
RatMatrix difference_matrix(const std::vector<RatVector>& points, const RatVector& target) {
    RatMatrix a(target.size(), points.size());
    for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t i = 0; i < target.size(); ++i) a(i, k) = points[k][i] - target[i];
    return a;
}

}  // namespace

FeasibilityResult solve_feasibility(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw DimensionMismatch("solve_feasibility: rows of A and b differ");
    RevisedSimplex t(a, b);
    FeasibilityResult res;
    res.pivots = t.run();
    res.feasible = t.feasible();
    if (res.feasible)
        res.solution = t.solution();
    else
        res.farkas = t.farkas();
    if (!verify_feasibility(a, b, res)) throw std::logic_error("simplex produced an invalid certificate");
    return res;
}

bool verify_feasibility(const RatMatrix& a, const RatVector& b, const FeasibilityResult& r) {
    if (r.feasible) {
        if (r.solution.size() != a.cols()) return false;
        for (const auto& x : r.solution)
            if (x.sign() < 0) return false;
        return a.apply(r.solution) == b;
    }
    if (r.farkas.size() != a.rows()) return false;
    const RatVector ya = a.transpose().apply(r.farkas);
    for (const auto& v : ya)
        if (v.sign() < 0) return false;
    return dot(r.farkas, b).sign() < 0;
}

MembershipCertificate convex_membership(const std::vector<RatVector>& points, const RatVector& target) {
    check_points(points, target);
    const std::size_t d = target.size();
    // Rows: (p - target) coordinates, then the affine row Σ t = 1.
    RatMatrix a(d + 1, points.size());
    const RatMatrix diff = difference_matrix(points, target);
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (std::size_t i = 0; i < d; ++i) a(i, k) = diff(i, k);
        a(d, k) = 1;
    }
    RatVector b(d + 1);
    b[d] = 1;
    const FeasibilityResult r = solve_feasibility(a, b);
    MembershipCertificate cert;
    if (r.feasible) {
        cert.verdict = Membership::Inside;
        cert.coefficients = r.solution;
    } else {
        // y = (s, c): <s, p - t> + c >= 0 and c < 0, so <s, p - t> > 0.
        cert.verdict = Membership::Outside;
        cert.separator.assign(r.farkas.begin(), r.farkas.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return cert;
}

bool verify_certificate(const std::vector<RatVector>& points, const RatVector& target,
                        const MembershipCertificate& cert) {
    check_points(points, target);
    if (cert.verdict == Membership::Inside) {
        if (cert.coefficients.size() != points.size()) return false;
        Rational total = 0;
        RatVector combo(target.size());
        for (std::size_t k = 0; k < points.size(); ++k) {
            const Rational& t = cert.coefficients[k];
            if (t.sign() < 0) return false;
            total += t;
            if (t.is_zero()) continue;
            for (std::size_t i = 0; i < target.size(); ++i) combo[i] += t * points[k][i];
        }
        return total == Rational(1) && combo == target;
    }
    if (cert.separator.size() != target.size()) return false;
    for (const auto& p : points)
        if (dot(cert.separator, difference(p, target)).sign() <= 0) return false;
    return true;
}

InteriorCertificate interior_membership(const std::vector<RatVector>& points, const RatVector& target) {
    InteriorCertificate cert;
    cert.hull = convex_membership(points, target);
    if (cert.hull.verdict == Membership::Outside) return cert;

    // The polar cone {λ : <p - t, λ> >= 0} is {0} iff the vectors p - t
    // positively span the space, i.e. iff every ±e_j is in their cone.
    const std::size_t d = target.size();
    const RatMatrix a = difference_matrix(points, target);
    for (std::size_t j = 0; j < d; ++j) {
        for (const int s : {-1, 1}) {
            RatVector e(d);
            e[j] = s;
            FeasibilityResult r = solve_feasibility(a, e);
            if (!r.feasible) {
                // yᵀA >= 0 and <y, ±e_j> < 0, so y is a nonzero supporting functional.
                cert.interior = false;
                cert.directions.clear();
                cert.supporting = std::move(r.farkas);
                return cert;
            }
            cert.directions.push_back(std::move(r.solution));
        }
    }
    cert.interior = true;
    return cert;
}

bool verify_certificate(const std::vector<RatVector>& points, const RatVector& target,
                        const InteriorCertificate& cert) {
    if (!verify_certificate(points, target, cert.hull)) return false;
    if (cert.hull.verdict == Membership::Outside) return !cert.interior;
    const std::size_t d = target.size();
    if (cert.interior) {
        if (cert.directions.size() != 2 * d) return false;
        const RatMatrix a = difference_matrix(points, target);
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                const RatVector& x = cert.directions[2 * j + k];
                if (x.size() != points.size()) return false;
                for (const auto& v : x)
                    if (v.sign() < 0) return false;
                RatVector e(d);
                e[j] = k == 0 ? -1 : 1;
                if (a.apply(x) != e) return false;
            }
        return true;
    }
    if (!cert.supporting) return false;
    const RatVector& lambda = *cert.supporting;
    if (lambda.size() != d) return false;
    bool nonzero = false;
    for (const auto& v : lambda) nonzero = nonzero || !v.is_zero();
    if (!nonzero) return false;
    for (const auto& p : points)
        if (dot(lambda, difference(p, target)).sign() < 0) return false;
    return true;
}

}  // namespace torus_git::ratlp
