#pragma once

#include <vector>

#include "lq/dvr/configuration.hpp"
#include "lq/rep/representation.hpp"

namespace lq::strata {

// r-element subsets of {0..d-1} in lexicographic order; the Plücker index set.
std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t r);
// Plücker coordinates of an r-dimensional subspace from its canonical basis.
Vec pluecker_coordinates(const Subspace& s);
// Subspace with the given Plücker vector (must be decomposable).
Subspace from_pluecker(std::uint32_t p, std::size_t d, std::size_t r, const Vec& coords);
// r-th compound matrix: all r x r minors.
dvr::KMatrix compound(const dvr::KMatrix& m, std::size_t r);

// Equational test against the linked-point condition. A^i is the compound of
// F_{i,ref} = t^{n_{i,ref}} basis(L_ref)^{-1} basis(L_i); the test stacks the reductions of
// A^i x_i and asks whether all 2 x 2 minors vanish.
struct PlueckerCheck {
    std::vector<Vec> coordinates;
    std::vector<dvr::KMatrix> compounds;
    std::vector<Vec> transported;  // A^i x_i mod t
    bool minors_vanish = false;
    bool linked = false;
    bool discrepancy() const { return minors_vanish && !linked; }
};
PlueckerCheck pluecker_check(const dvr::LatticeConfiguration& config, std::size_t reference, const rep::SubRep& points);

}  // namespace lq::strata
