#pragma once

#include <optional>
#include <vector>

#include "lq/dvr/kmatrix.hpp"

namespace lq::dvr {

// Full-rank R-submodule of K^d, given by a basis: the columns of an invertible d x d matrix.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(KMatrix basis);  // throws InvalidInput unless square and invertible

    static Lattice standard(std::uint32_t p, std::size_t d);
    // span{ t^{e_j} e_j }
    static Lattice diagonal(std::uint32_t p, const std::vector<int>& exponents);

    std::size_t dim() const { return basis_.rows(); }
    std::uint32_t prime() const { return basis_.prime(); }
    const KMatrix& basis() const { return basis_; }

    Lattice scaled(int k) const { return Lattice(basis_.shifted(k)); }  // t^k L
    // Coordinates of the columns of `vectors` in this lattice's basis.
    KMatrix coordinates(const KMatrix& vectors) const;
    bool contains(const KMatrix& vectors) const { return coordinates(vectors).in_ring(); }
    bool contains(const Lattice& other) const { return contains(other.basis_); }
    bool equals(const Lattice& other) const { return contains(other) && other.contains(*this); }

private:
    KMatrix basis_;
};

// Relative position of two lattices. With e the adapted basis of L2 (columns),
// L1 = span{ t^{a_j} e_j } where a_0 >= a_1 >= ... >= a_{d-1}.
struct PairProfile {
    std::vector<int> exponents;
    KMatrix adapted_basis;
};

PairProfile smith_pair(const Lattice& l1, const Lattice& l2);

// Smallest n with t^n Li contained in Lj.
int n_min(const Lattice& li, const Lattice& lj);
// k with L1 = t^k L2, if the two are homothetic.
std::optional<int> homothety_shift(const Lattice& l1, const Lattice& l2);
// Classes [L1], [L2] distinct with representatives L2 ⊋ L1 ⊋ t L2.
bool adjacent(const Lattice& l1, const Lattice& l2);
Lattice intersect(const Lattice& l1, const Lattice& l2);

// Representative of [L] whose basis entries have minimal valuation 0.
Lattice normalized(const Lattice& l);

// Chain [L_0] = [L1], [L_1], ..., [L_m] = [L2] of consecutive adjacent classes joining the
// two classes. Representatives satisfy L_0 ⊆ L_1 ⊆ ... ⊆ L_m = L2 and L_{i+1} ⊆ t^{-1} L_i.
std::vector<Lattice> convex_hull_pair(const Lattice& l1, const Lattice& l2);

}  // namespace lq::dvr
