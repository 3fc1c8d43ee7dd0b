#include "torus_git/linalg.hpp"

#include <utility>

namespace torus_git::ratlp {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    RatMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatVector RatMatrix::apply(const RatVector& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector dimension mismatch");
    RatVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        mpq_class acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j).raw() * v[j].raw();
        out[i] = Rational(acc);
    }
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product dimension mismatch");
    RatMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j) {
            mpq_class acc = 0;
            for (std::size_t k = 0; k < a.cols_; ++k) acc += a(i, k).raw() * b(k, j).raw();
            out(i, j) = Rational(acc);
        }
    return out;
}

namespace {

// Row-reduces `m` in place (optionally mirroring the operations on `aug`),
// returning the rank and the determinant of the leading square block.
struct Reduction {
    std::size_t rank = 0;
    Rational det = 1;
};

Reduction row_reduce(RatMatrix& m, RatMatrix* aug) {
    Reduction red;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) {
            red.det = 0;
            continue;
        }
        if (pivot != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
            if (aug)
                for (std::size_t j = 0; j < aug->cols(); ++j) std::swap((*aug)(pivot, j), (*aug)(row, j));
            red.det = -red.det;
        }
        const Rational p = m(row, col);
        red.det *= p;
        for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) /= p;
        if (aug)
            for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(row, j) /= p;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const Rational f = m(r, col);
            for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
            if (aug)
                for (std::size_t j = 0; j < aug->cols(); ++j) (*aug)(r, j) -= f * (*aug)(row, j);
        }
        ++row;
    }
    red.rank = row;
    if (red.rank < m.rows()) red.det = 0;
    return red;
}

}  // namespace

RatMatrix invert_matrix(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("invert_matrix: matrix is not square");
    RatMatrix work = m;
    RatMatrix inv = RatMatrix::identity(m.rows());
    if (row_reduce(work, &inv).rank != m.rows()) throw SingularMatrix();
    return inv;
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant: matrix is not square");
    RatMatrix work = m;
    return row_reduce(work, nullptr).det;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix work = m;
    return row_reduce(work, nullptr).rank;
}

}  // namespace torus_git::ratlp
