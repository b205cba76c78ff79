#include "lq/graph/tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lq/error.hpp"

namespace lq {

Tree::Tree(std::size_t n, std::vector<std::pair<int, int>> edges) : n_(n), adj_(n) {
    if (n == 0) throw InvalidInput("a tree needs at least one vertex");
    if (edges.size() + 1 != n) throw InvalidInput("a tree on n vertices has n-1 edges");
    for (auto& [a, b] : edges) {
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n || a == b)
            throw InvalidInput("tree edge references an invalid vertex");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) throw InvalidInput("repeated tree edge");
    for (auto [a, b] : edges) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edges_ = std::move(edges);
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
    }
    if (count != n) throw InvalidInput("tree is not connected");
}

bool Tree::adjacent(int u, int v) const {
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Tree::path(int u, int v) const {
    std::vector<int> parent(n_, -1);
    std::vector<int> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        int x = queue[h];
        for (int y : adj_[static_cast<std::size_t>(x)])
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                queue.push_back(y);
            }
    }
    std::vector<int> out;
    for (int x = v; x != u; x = parent[static_cast<std::size_t>(x)]) out.push_back(x);
    out.push_back(u);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Tree> Tree::all_labelled(std::size_t n) {
    if (n == 0) return {};
    if (n == 1) return {Tree(1, {})};
    if (n == 2) return {Tree(2, {{0, 1}})};
    std::vector<Tree> out;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int s : seq) ++degree[static_cast<std::size_t>(s)];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (std::size_t v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.insert(static_cast<int>(v));
        for (int s : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(leaf, s);
            if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
        }
        edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
        out.emplace_back(n, edges);
        std::size_t k = 0;
        while (k < seq.size() && ++seq[k] == static_cast<int>(n)) seq[k++] = 0;
        if (k == seq.size()) break;
    }
    return out;
}

}  // namespace lq
