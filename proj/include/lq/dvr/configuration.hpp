#pragma once

#include <optional>
#include <vector>

#include "lq/dvr/lattice.hpp"
#include "lq/graph/tree.hpp"
#include "lq/linalg/field_matrix.hpp"

namespace lq::dvr {

using ExponentMatrix = std::vector<std::vector<int>>;

// Finite set of pairwise distinct homothety classes of lattices in K^d, each held by a
// normalised representative. Homothetic inputs are merged; input_to_class() records
// where every input went.
class LatticeConfiguration {
public:
    LatticeConfiguration() = default;
    explicit LatticeConfiguration(const std::vector<Lattice>& lattices);

    std::size_t size() const { return reps_.size(); }
    std::size_t dim() const { return d_; }
    std::uint32_t prime() const { return p_; }
    const Lattice& lattice(std::size_t i) const { return reps_.at(i); }
    const std::vector<Lattice>& lattices() const { return reps_; }
    const std::vector<std::size_t>& input_to_class() const { return merge_; }

    int n(std::size_t i, std::size_t j) const { return n_[i][j]; }
    const ExponentMatrix& n_matrix() const { return n_; }
    bool adjacent(std::size_t i, std::size_t j) const { return i != j && n_[i][j] + n_[j][i] == 1; }
    std::optional<std::size_t> find_class(const Lattice& l) const;

    // Reduction mod t of t^{n_ij} : L_i -> L_j, in the bases of the two representatives.
    FieldMatrix induced_map(std::size_t i, std::size_t j) const;

private:
    std::uint32_t p_ = 2;
    std::size_t d_ = 0;
    std::vector<Lattice> reps_;
    std::vector<std::size_t> merge_;
    ExponentMatrix n_;
};

bool is_convex(const LatticeConfiguration& config);
// Smallest convex configuration containing the input. Original classes keep their indices.
LatticeConfiguration convex_closure(const LatticeConfiguration& config);

// Configuration in the apartment of the standard basis: L_i = span{ t^{E[i][j]} e_j }.
LatticeConfiguration config_from_exponents(std::uint32_t p, const ExponentMatrix& exponents);
// Exponents a_{u,v} = number of edges shared by the paths u->root and u->v, in dimension |V|.
ExponentMatrix tree_exponents(const Tree& tree, int root);
LatticeConfiguration config_from_tree(std::uint32_t p, const Tree& tree, int root);

}  // namespace lq::dvr
