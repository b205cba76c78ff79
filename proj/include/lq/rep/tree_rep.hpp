#pragma once

#include <optional>
#include <vector>

#include "lq/quiver/tree_geometry.hpp"
#include "lq/rep/representation.hpp"

namespace lq::rep {

// A representation whose quiver is a double tree, with every tree-path composite cached.
// On M_Γ for a locally linearly independent Γ these composites are the induced maps f_{u,w}.
class TreeRep {
public:
    explicit TreeRep(QuiverRep m);  // throws InvalidInput unless the quiver is a double tree

    const QuiverRep& rep() const { return m_; }
    const quiver::DoubleTreeGeom& geom() const { return geom_; }
    std::size_t size() const { return m_.size(); }
    std::uint32_t prime() const { return m_.p; }
    const FieldMatrix& edge_map(std::size_t e) const { return edge_maps_[e]; }
    const FieldMatrix& pair_map(std::size_t u, std::size_t w) const { return pair_maps_[u][w]; }
    bool locally_independent() const { return lli_; }

private:
    QuiverRep m_;
    quiver::DoubleTreeGeom geom_;
    std::vector<FieldMatrix> edge_maps_;
    std::vector<std::vector<FieldMatrix>> pair_maps_;
    bool lli_ = false;
};

// Multiplicities of the summands P_v and R_e in a subrepresentation of a locally
// linearly independent double-tree representation.
struct Decomposition {
    std::vector<int> vertex;  // r_v
    std::vector<int> edge;    // r_e, indexed like geom().edges()
    bool projective() const;
    bool operator==(const Decomposition&) const = default;
};

Decomposition decompose(const TreeRep& m, const SubRep& u);
bool is_projective(const TreeRep& m, const SubRep& u);
// Dimension at w predicted by the multiplicities: P_v is one-dimensional everywhere,
// R_e is one-dimensional exactly on A_e.
std::vector<std::size_t> dims_from_decomposition(const quiver::DoubleTreeGeom& g, const Decomposition& dec);

// One generator per indecomposable summand: a P_v generator sits at v, an R_e generator
// at s(e) inside ker f_e.
struct Generator {
    std::size_t vertex;
    Vec vector;
    std::optional<std::size_t> edge;  // empty for P_v
};
std::vector<Generator> adapted_generators(const TreeRep& m, const SubRep& u);
// Smallest subrepresentation containing the given vectors.
SubRep generated_subrep(const TreeRep& m, const std::vector<std::pair<std::size_t, Vec>>& vectors);

// Extends prescribed r-dimensional subspaces on a nonempty vertex set to an r-dimensional
// subrepresentation, provided every W_u = {x : f_{u,v}(x) ∈ V_v for prescribed v} has dim >= r.
SubRep lift_to_subrep(const TreeRep& m, std::size_t r, const std::vector<std::optional<Subspace>>& prescribed);

}  // namespace lq::rep
