#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "torus_git/rational.hpp"

namespace torus_git::ratlp {

class SingularMatrix : public std::domain_error {
public:
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of rationals.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RatMatrix transpose() const;
    RatVector apply(const RatVector& v) const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Gauss-Jordan inverse. Throws SingularMatrix, or DimensionMismatch when
/// the matrix is not square.
RatMatrix invert_matrix(const RatMatrix& m);

Rational determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

}  // namespace torus_git::ratlp
