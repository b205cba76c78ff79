#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lq/linalg/prime_field.hpp"

namespace lq {

using Vec = std::vector<Fp>;

// Dense matrix over F_p. Maps act on column vectors: x -> A x.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);

    static FieldMatrix identity(std::uint32_t p, std::size_t n);
    static FieldMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);
    static FieldMatrix from_vectors(std::uint32_t p, std::size_t cols, const std::vector<Vec>& rows);
    static FieldMatrix diagonal(std::uint32_t p, const std::vector<std::int64_t>& diag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }
    Zp field() const { return Zp{p_}; }

    Fp operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Fp& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;
    std::vector<Vec> row_vectors() const;

    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix scaled(Fp c) const;
    Vec apply(const Vec& x) const;
    FieldMatrix transpose() const;
    FieldMatrix vstack(const FieldMatrix& below) const;
    FieldMatrix hstack(const FieldMatrix& right) const;

    bool is_zero() const;
    bool operator==(const FieldMatrix& o) const = default;

    struct Echelon;
    Echelon rref() const;
    std::size_t rank() const;
    // Rows form a basis of the right null space {x : A x = 0}.
    FieldMatrix kernel() const;
    std::optional<Vec> solve(const Vec& b) const;
    FieldMatrix inverse() const;
    bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }

    std::string to_string() const;

private:
    std::uint32_t p_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Fp> data_;
};

struct FieldMatrix::Echelon {
    FieldMatrix reduced;               // nonzero rows only, reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each row
};

bool is_zero_vector(const Vec& v);

}  // namespace lq
