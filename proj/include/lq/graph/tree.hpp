#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace lq {

// Finite undirected tree on vertices 0..n-1.
class Tree {
public:
    Tree() = default;
    Tree(std::size_t n, std::vector<std::pair<int, int>> edges);  // validates

    std::size_t size() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const;
    std::vector<int> path(int u, int v) const;  // vertex sequence from u to v inclusive
    std::size_t distance(int u, int v) const { return path(u, v).size() - 1; }

    // All labelled trees on n vertices, enumerated through Pruefer sequences.
    static std::vector<Tree> all_labelled(std::size_t n);

private:
    std::size_t n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

}  // namespace lq
