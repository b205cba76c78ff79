#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lq/rep/tree_rep.hpp"

namespace lq::strata {

using quiver::DoubleTreeGeom;
using rep::Decomposition;
using rep::SubRep;
using rep::TreeRep;

// One entry per oriented edge, in DoubleTreeGeom order.
using StrataTuple = std::vector<int>;

// Φ(U)_e = dim f_e(U_{s(e)}).
StrataTuple phi(const TreeRep& m, const SubRep& u);

// Ambient multiplicities d_v of the summands P_v in M_Γ.
std::vector<int> ambient_multiplicities(const TreeRep& m);

bool admissible(const DoubleTreeGeom& g, const std::vector<int>& d, int r, const StrataTuple& tuple);
// Every admissible tuple, in lexicographic order.
std::vector<StrataTuple> enumerate_strata(const DoubleTreeGeom& g, const std::vector<int>& d, int r);

// Multiplicity vectors (r_v) with sum r and sum over A_e of r_v at most sum over A_e of d_v.
std::vector<std::vector<int>> components(const DoubleTreeGeom& g, const std::vector<int>& d, int r);
StrataTuple component_image(const DoubleTreeGeom& g, const std::vector<int>& rv);

// Summand multiplicities of the subrepresentations in the stratum of an admissible tuple.
Decomposition decomposition_of(const DoubleTreeGeom& g, int r, const StrataTuple& tuple);

// dim Hom(M, M_Γ) - dim End(M) for M with the given multiplicities and M_Γ = ⊕ P_v^{d_v}.
int hom_table(const DoubleTreeGeom& g, const Decomposition& a, const Decomposition& b);
int stratum_dim(const DoubleTreeGeom& g, const std::vector<int>& d, const Decomposition& dec);

bool closure_leq(const StrataTuple& a, const StrataTuple& b);
std::vector<StrataTuple> maximal_elements(const std::vector<StrataTuple>& tuples);

// A point of the stratum of `tuple`, built from random combinations of a global basis.
// Throws RealizationFailed when `attempts` random draws all miss the stratum.
SubRep realize_stratum(const TreeRep& m, int r, const StrataTuple& tuple, std::mt19937_64& rng, int attempts = 200);

// Perturbs U so that one R_ι and one R_ῑ summand merge into a P_{s(ι)}; Φ rises by one on ι.
SubRep specialize(const TreeRep& m, const SubRep& u, std::size_t iota, std::mt19937_64& rng);

}  // namespace lq::strata
