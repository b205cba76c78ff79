#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lq/dvr/configuration.hpp"
#include "lq/linalg/subspace.hpp"
#include "lq/quiver/quiver.hpp"

namespace lq::rep {

// Representation of a weighted quiver over F_p; maps[a] belongs to quiver.arrows()[a].
struct QuiverRep {
    quiver::WeightedQuiver quiver;
    std::uint32_t p = 2;
    std::vector<std::size_t> dims;
    std::vector<FieldMatrix> maps;

    std::size_t size() const { return dims.size(); }
    const FieldMatrix& map(std::size_t from, std::size_t to) const;
    // Composite along a path; the identity for a single vertex.
    FieldMatrix path_map(const quiver::Path& path) const;
};

// The ambient representation: every vertex carries L_i / t L_i and each arrow the induced map.
QuiverRep build_M(const dvr::LatticeConfiguration& config);

// A choice of subspace at each vertex.
struct SubRep {
    std::vector<Subspace> spaces;
    std::vector<std::size_t> dims() const;
    bool operator==(const SubRep&) const = default;
    auto operator<=>(const SubRep&) const = default;
};

bool is_subrep(const QuiverRep& m, const SubRep& u);
// U as a representation in its own right, in the canonical bases of the subspaces.
QuiverRep restrict(const QuiverRep& m, const SubRep& u);
// dim Hom(A, B) by solving the commuting-square equations; A and B share a quiver.
std::size_t hom_dim(const QuiverRep& a, const QuiverRep& b);

// Checks the path relations on M_Γ: along every path of length at most max_length the
// composite is f_{s,t} when the weight is n_{s,t} and zero otherwise. It also lists pairs of
// arrow-simple paths with equal ends where one composite vanishes and the other does not.
struct RelationReport {
    bool ok = true;
    std::size_t paths_checked = 0;
    std::vector<std::string> violations;
    std::vector<std::pair<quiver::Path, quiver::Path>> mixed_pairs;
};
RelationReport check_relations(const dvr::LatticeConfiguration& config, const QuiverRep& m, std::size_t max_length);

// At every class, the images of L_i / t L_i from all adjacent classes are independent.
bool local_linear_independence(const dvr::LatticeConfiguration& config);
// Representation-level counterpart using arrows for adjacency.
bool local_linear_independence(const QuiverRep& m);

// Rank of every path composite of length at most max_length, keyed by the path. Two
// representations on one quiver with the same dims and the same profile are treated as
// isomorphic.
std::vector<std::pair<quiver::Path, std::size_t>> rank_profile(const QuiverRep& m, std::size_t max_length);
bool same_rank_profile(const QuiverRep& a, const QuiverRep& b, std::size_t max_length);

}  // namespace lq::rep
