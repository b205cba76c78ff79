#include "lq/dvr/kmatrix.hpp"

#include "lq/error.hpp"

namespace lq::dvr {

KMatrix::KMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, Scalar(p)) {}

KMatrix KMatrix::identity(std::uint32_t p, std::size_t n) {
    KMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(p, 1);
    return m;
}

KMatrix KMatrix::monomial_diagonal(std::uint32_t p, const std::vector<int>& exponents) {
    KMatrix m(p, exponents.size(), exponents.size());
    for (std::size_t i = 0; i < exponents.size(); ++i) m(i, i) = Scalar::monomial(p, 1, exponents[i]);
    return m;
}

KMatrix KMatrix::lift(const FieldMatrix& a) {
    KMatrix m(a.prime(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = Scalar(a.prime(), a(i, j));
    return m;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("K-matrix product dimension mismatch");
    KMatrix r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (o(k, j).is_zero()) continue;
                r(i, j) = r(i, j) + a * o(k, j);
            }
        }
    return r;
}

KMatrix KMatrix::scaled(const Scalar& c) const {
    KMatrix r(*this);
    for (auto& x : r.data_) x = x * c;
    return r;
}

void KMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void KMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

KMatrix KMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of a non-square K-matrix");
    std::size_t n = rows_;
    KMatrix a(*this);
    KMatrix inv = identity(p_, n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) throw InvalidInput("K-matrix is singular");
        a.swap_rows(piv, c);
        inv.swap_rows(piv, c);
        Scalar s = a(c, c).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) = a(c, j) * s;
            inv(c, j) = inv(c, j) * s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c).is_zero()) continue;
            Scalar m = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!a(c, j).is_zero()) a(i, j) = a(i, j) - m * a(c, j);
                if (!inv(c, j).is_zero()) inv(i, j) = inv(i, j) - m * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t KMatrix::rank() const {
    KMatrix a(*this);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && a(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        a.swap_rows(piv, r);
        Scalar s = a(r, c).inverse();
        for (std::size_t i = r + 1; i < rows_; ++i) {
            if (a(i, c).is_zero()) continue;
            Scalar m = a(i, c) * s;
            for (std::size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) - m * a(r, j);
        }
        ++r;
    }
    return r;
}

KMatrix KMatrix::column_block(const std::vector<std::size_t>& columns) const {
    KMatrix r(p_, rows_, columns.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < columns.size(); ++j) r(i, j) = (*this)(i, columns[j]);
    return r;
}

int KMatrix::min_valuation() const {
    int m = Scalar::kInfinity;
    for (const auto& x : data_) m = std::min(m, x.valuation());
    return m;
}

FieldMatrix KMatrix::residue() const {
    FieldMatrix r(p_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).residue();
    return r;
}

}  // namespace lq::dvr
