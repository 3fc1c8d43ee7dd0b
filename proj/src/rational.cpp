#include "torus_git/rational.hpp"

#include <limits>
#include <numeric>

namespace torus_git::ratlp {

namespace {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

mpz_class to_mpz(std::int64_t v) { return mpz_class(static_cast<long>(v)); }

}  // namespace

Rational::Rational(std::int64_t n) : value_(to_mpz(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DivisionByZero();
    value_ = mpq_class(to_mpz(num), to_mpz(den));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-')
        throw std::invalid_argument("malformed rational literal: " + s);
    mpz_class d(den);
    if (d == 0) throw DivisionByZero();
    return Rational(mpq_class(mpz_class(num), d));
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw std::overflow_error("rational is not an integer: " + str());
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("integer out of range: " + str());
    return n.get_si();
}

std::string Rational::str() const { return value_.get_str(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
}

Rational dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    mpq_class acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
    return Rational(acc);
}

std::vector<std::int64_t> primitive_integer(const RatVector& v) {
    mpz_class lcm_den = 1;
    for (const auto& x : v) lcm_den = lcm(lcm_den, x.denominator());
    std::vector<mpz_class> ints;
    ints.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.numerator() * (lcm_den / x.denominator());
        g = gcd(g, n);
        ints.push_back(std::move(n));
    }
    std::vector<std::int64_t> out;
    out.reserve(v.size());
    for (auto& n : ints) {
        if (g != 0) n /= g;
        if (!n.fits_slong_p()) throw std::overflow_error("primitive vector entry out of range");
        out.push_back(n.get_si());
    }
    return out;
}

}  // namespace torus_git::ratlp
