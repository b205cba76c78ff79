#include "lq/quiver/tree_geometry.hpp"

#include <algorithm>

#include "lq/error.hpp"

namespace lq::quiver {

DoubleTreeGeom::DoubleTreeGeom(Tree tree) : tree_(std::move(tree)) {
    const std::size_t n = tree_.size();
    std::vector<std::pair<std::size_t, std::size_t>> oriented;
    for (auto [a, b] : tree_.edges()) {
        oriented.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
        oriented.emplace_back(static_cast<std::size_t>(b), static_cast<std::size_t>(a));
    }
    std::sort(oriented.begin(), oriented.end());
    out_.assign(n, {});
    in_.assign(n, {});
    for (auto [s, t] : oriented) {
        OrientedEdge e{s, t, 0, std::vector<bool>(n, false)};
        for (std::size_t v = 0; v < n; ++v) {
            auto path = tree_.path(static_cast<int>(v), static_cast<int>(s));
            e.side[v] = std::find(path.begin(), path.end(), static_cast<int>(t)) == path.end();
        }
        out_[s].push_back(edges_.size());
        in_[t].push_back(edges_.size());
        edges_.push_back(std::move(e));
    }
    for (auto& e : edges_) e.reverse = edge_index(e.t, e.s);
}

std::size_t DoubleTreeGeom::edge_index(std::size_t s, std::size_t t) const {
    for (auto e : out_.at(s))
        if (edges_[e].t == t) return e;
    throw InvalidInput("vertices are not joined by a tree edge");
}

std::size_t DoubleTreeGeom::step_towards(std::size_t u, std::size_t w) const {
    for (auto e : out_.at(u))
        if (!edges_[e].side[w]) return edges_[e].t;
    throw InvalidInput("no step from a vertex towards itself");
}

}  // namespace lq::quiver
