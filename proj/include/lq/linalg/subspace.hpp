#pragma once

#include <compare>
#include <vector>

#include "lq/linalg/field_matrix.hpp"

namespace lq {

// Subspace of F_p^n stored by its reduced row echelon basis, so two equal
// subspaces always compare equal field by field.
class Subspace {
public:
    Subspace() = default;
    Subspace(std::uint32_t p, std::size_t ambient);  // the zero subspace

    static Subspace full(std::uint32_t p, std::size_t ambient);
    static Subspace span(std::uint32_t p, std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace row_space(const FieldMatrix& m);

    std::size_t dim() const { return basis_.rows(); }
    std::size_t ambient() const { return ambient_; }
    std::uint32_t prime() const { return p_; }
    const FieldMatrix& basis() const { return basis_; }
    std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace operator+(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    Subspace image(const FieldMatrix& map) const;
    // {x : map x in target}
    static Subspace preimage(const FieldMatrix& map, const Subspace& target);

    // Vectors from `pool`, taken in order, that extend this space, stopping once
    // `target_dim` is reached or the pool is exhausted.
    std::vector<Vec> greedy_extension(const std::vector<Vec>& pool, std::size_t target_dim) const;
    // Basis of a complement of this space inside `outer` chosen from outer's canonical basis.
    std::vector<Vec> complement_in(const Subspace& outer) const;

    bool operator==(const Subspace& o) const = default;
    std::strong_ordering operator<=>(const Subspace& o) const;

private:
    std::uint32_t p_ = 2;
    std::size_t ambient_ = 0;
    FieldMatrix basis_;
};

}  // namespace lq
