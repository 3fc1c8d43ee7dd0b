#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace torus_git::ratlp {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator, so 0 is uniquely 0/1.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class value);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Throws std::overflow_error when not an integer fitting in int64.
    std::int64_t to_int64() const;

    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

using RatVector = std::vector<Rational>;

Rational dot(const RatVector& a, const RatVector& b);

/// Scales a nonzero rational vector by a positive factor so that it becomes a
/// primitive integer vector (gcd of entries 1). The zero vector is returned
/// unchanged.
std::vector<std::int64_t> primitive_integer(const RatVector& v);

}  // namespace torus_git::ratlp
