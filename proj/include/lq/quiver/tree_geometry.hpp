#pragma once

#include <optional>
#include <vector>

#include "lq/graph/tree.hpp"

namespace lq::quiver {

struct OrientedEdge {
    std::size_t s;
    std::size_t t;
    std::size_t reverse;        // index of the opposite orientation
    std::vector<bool> side;     // side[v]: the path from v to s avoids t (v in A_e)
};

// Oriented edges of a tree, sorted by (source, target), with the half-trees A_e.
class DoubleTreeGeom {
public:
    DoubleTreeGeom() = default;
    explicit DoubleTreeGeom(Tree tree);

    const Tree& tree() const { return tree_; }
    std::size_t vertex_count() const { return tree_.size(); }
    const std::vector<OrientedEdge>& edges() const { return edges_; }
    const OrientedEdge& edge(std::size_t e) const { return edges_[e]; }
    std::size_t edge_index(std::size_t s, std::size_t t) const;  // throws if not an edge
    const std::vector<std::size_t>& outgoing(std::size_t v) const { return out_[v]; }
    const std::vector<std::size_t>& incoming(std::size_t v) const { return in_[v]; }
    bool in_side(std::size_t e, std::size_t v) const { return edges_[e].side[v]; }
    // Next vertex on the tree path from u towards w (u != w).
    std::size_t step_towards(std::size_t u, std::size_t w) const;

private:
    Tree tree_;
    std::vector<OrientedEdge> edges_;
    std::vector<std::vector<std::size_t>> out_, in_;
};

}  // namespace lq::quiver
