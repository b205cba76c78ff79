#pragma once

#include <vector>

#include "lq/dvr/scalar.hpp"
#include "lq/linalg/field_matrix.hpp"

namespace lq::dvr {

// Dense matrix over K = F_p(t).
class KMatrix {
public:
    KMatrix() = default;
    KMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static KMatrix identity(std::uint32_t p, std::size_t n);
    // diag(t^{e_0}, ..., t^{e_{n-1}})
    static KMatrix monomial_diagonal(std::uint32_t p, const std::vector<int>& exponents);
    // Constant matrix lifted from the residue field.
    static KMatrix lift(const FieldMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    KMatrix operator*(const KMatrix& o) const;
    KMatrix scaled(const Scalar& c) const;
    KMatrix shifted(int k) const { return scaled(Scalar::monomial(p_, 1, k)); }
    KMatrix inverse() const;  // throws InvalidInput if singular
    std::size_t rank() const;
    KMatrix column_block(const std::vector<std::size_t>& columns) const;

    int min_valuation() const;  // Scalar::kInfinity for the zero matrix
    bool in_ring() const { return min_valuation() >= 0; }
    FieldMatrix residue() const;  // entrywise reduction mod t; needs in_ring()

    bool operator==(const KMatrix& o) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace lq::dvr
