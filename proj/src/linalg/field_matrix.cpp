#include "lq/linalg/field_matrix.hpp"

#include <sstream>

#include "lq/error.hpp"

namespace lq {

FieldMatrix::FieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::identity(std::uint32_t p, std::size_t n) {
    FieldMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1 % p;
    return m;
}

FieldMatrix FieldMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    FieldMatrix m(p, rows.size(), c);
    Zp f{p};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

FieldMatrix FieldMatrix::from_vectors(std::uint32_t p, std::size_t cols, const std::vector<Vec>& rows) {
    FieldMatrix m(p, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw InvalidInput("vector length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

FieldMatrix FieldMatrix::diagonal(std::uint32_t p, const std::vector<std::int64_t>& diag) {
    FieldMatrix m(p, diag.size(), diag.size());
    Zp f{p};
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = f.reduce(diag[i]);
    return m;
}

Vec FieldMatrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec FieldMatrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

std::vector<Vec> FieldMatrix::row_vectors() const {
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw InvalidInput("matrix product dimension mismatch");
    FieldMatrix r(p_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) = static_cast<Fp>((r(i, j) + a * o(k, j)) % p_);
        }
    return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidInput("matrix sum dimension mismatch");
    FieldMatrix r(*this);
    Zp f{p_};
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = f.add(data_[k], o.data_[k]);
    return r;
}

FieldMatrix FieldMatrix::scaled(Fp c) const {
    FieldMatrix r(*this);
    Zp f{p_};
    for (auto& x : r.data_) x = f.mul(x, c);
    return r;
}

Vec FieldMatrix::apply(const Vec& x) const {
    if (x.size() != cols_) throw InvalidInput("vector length does not match matrix");
    Vec y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{(*this)(i, j)} * x[j]) % p_;
        y[i] = static_cast<Fp>(acc);
    }
    return y;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(p_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FieldMatrix FieldMatrix::vstack(const FieldMatrix& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw InvalidInput("vstack column mismatch");
    FieldMatrix r(p_, rows_ + below.rows_, cols_);
    std::copy(data_.begin(), data_.end(), r.data_.begin());
    std::copy(below.data_.begin(), below.data_.end(), r.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return r;
}

FieldMatrix FieldMatrix::hstack(const FieldMatrix& right) const {
    if (rows_ != right.rows_) throw InvalidInput("hstack row mismatch");
    FieldMatrix r(p_, rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) r(i, cols_ + j) = right(i, j);
    }
    return r;
}

bool FieldMatrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

FieldMatrix::Echelon FieldMatrix::rref() const {
    FieldMatrix a(*this);
    Zp f{p_};
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && a(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(a(piv, j), a(r, j));
        Fp s = f.inv(a(r, c));
        for (std::size_t j = c; j < cols_; ++j) a(r, j) = f.mul(a(r, j), s);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Fp m = a(i, c);
            for (std::size_t j = c; j < cols_; ++j) a(i, j) = f.sub(a(i, j), f.mul(m, a(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    FieldMatrix red(p_, r, cols_);
    std::copy(a.data_.begin(), a.data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), red.data_.begin());
    return {std::move(red), std::move(pivots)};
}

std::size_t FieldMatrix::rank() const { return rref().pivots.size(); }

FieldMatrix FieldMatrix::kernel() const {
    auto [red, pivots] = rref();
    Zp f{p_};
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        Vec v(cols_, 0);
        v[free] = 1 % p_;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red(i, free));
        basis.push_back(std::move(v));
    }
    return from_vectors(p_, cols_, basis);
}

std::optional<Vec> FieldMatrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw InvalidInput("right-hand side length mismatch");
    FieldMatrix bcol(p_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) bcol(i, 0) = b[i];
    auto [red, pivots] = hstack(bcol).rref();
    Vec x(cols_, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols_) return std::nullopt;
        x[pivots[i]] = red(i, cols_);
    }
    return x;
}

FieldMatrix FieldMatrix::inverse() const {
    if (rows_ != cols_) throw InvalidInput("inverse of non-square matrix");
    auto [red, pivots] = hstack(identity(p_, rows_)).rref();
    if (pivots.size() < rows_ || pivots[rows_ - 1] >= cols_) throw InvalidInput("matrix is singular");
    FieldMatrix inv(p_, rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) inv(i, j) = red(i, cols_ + j);
    return inv;
}

std::string FieldMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]";
    }
    return os.str();
}

bool is_zero_vector(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace lq
