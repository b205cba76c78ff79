#pragma once

#include <vector>

#include "lq/dvr/configuration.hpp"
#include "lq/rep/representation.hpp"

namespace lq::rep {

// A chain E_0 <-> E_1 <-> ... <-> E_{n-1} of d-dimensional spaces with g[i] : E_i -> E_{i+1}
// and h[i] : E_{i+1} -> E_i.
struct ChainData {
    std::uint32_t p = 2;
    std::size_t d = 0;
    std::vector<FieldMatrix> g;
    std::vector<FieldMatrix> h;
    std::size_t length() const { return g.size() + 1; }
};

struct ChainEquivalence {
    dvr::KMatrix basis;              // columns: lifted global basis vectors, in E_0 coordinates
    dvr::ExponentMatrix exponents;   // L_i = span{ t^{exponents[i][j]} basis_j }
    dvr::LatticeConfiguration config;
    QuiverRep chain_rep;             // the input chain on the quiver of `config`
};

// Builds a convex chain of lattice classes whose ambient representation matches the linked
// chain. The data must satisfy g h = h g = 0, rank g_i + rank h_i = d, no rank drop along
// composites, and no link may be an isomorphism. Throws InvalidInput otherwise.
ChainEquivalence linked_chain_equivalence(const ChainData& data);

}  // namespace lq::rep
