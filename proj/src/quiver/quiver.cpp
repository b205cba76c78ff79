#include "lq/quiver/quiver.hpp"

#include "lq/error.hpp"

namespace lq::quiver {

WeightedQuiver::WeightedQuiver(dvr::ExponentMatrix weights) : n_(std::move(weights)) {
    const std::size_t m = n_.size();
    for (const auto& row : n_)
        if (row.size() != m) throw InvalidInput("weight matrix must be square");
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            bool split = false;
            for (std::size_t k = 0; k < m && !split; ++k)
                split = k != i && k != j && n_[i][k] + n_[k][j] == n_[i][j];
            if (!split) arrows_.push_back({i, j});
        }
}

std::optional<std::size_t> WeightedQuiver::arrow_index(std::size_t from, std::size_t to) const {
    for (std::size_t a = 0; a < arrows_.size(); ++a)
        if (arrows_[a].from == from && arrows_[a].to == to) return a;
    return std::nullopt;
}

bool WeightedQuiver::is_path(const Path& path) const {
    if (path.empty()) return false;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (!has_arrow(path[k], path[k + 1])) return false;
    return true;
}

int WeightedQuiver::path_weight(const Path& path) const {
    if (path.empty()) throw InvalidInput("empty path");
    int w = 0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) w += n_[path[k]][path[k + 1]];
    return w;
}

bool WeightedQuiver::path_is_zero(const Path& path) const {
    return path_weight(path) > n_[path.front()][path.back()];
}

std::optional<Tree> WeightedQuiver::double_tree() const {
    std::vector<std::pair<int, int>> edges;
    for (const auto& a : arrows_) {
        if (!has_arrow(a.to, a.from)) return std::nullopt;
        if (a.from < a.to) edges.emplace_back(static_cast<int>(a.from), static_cast<int>(a.to));
    }
    if (edges.size() + 1 != size()) return std::nullopt;
    try {
        return Tree(size(), edges);
    } catch (const InvalidInput&) {
        return std::nullopt;
    }
}

std::optional<PathClass> compose(const WeightedQuiver& q, PathClass a, PathClass b) {
    if (a.to != b.from) throw InvalidInput("paths do not meet");
    if (q.n(a.from, a.to) + q.n(b.from, b.to) == q.n(a.from, b.to)) return PathClass{a.from, b.to};
    return std::nullopt;
}

bool geometric_product_vanishes(const dvr::LatticeConfiguration& config, std::size_t i, std::size_t ip, std::size_t j) {
    if (ip == j) return false;  // l_{j,j} is the idempotent
    using dvr::Lattice;
    const Lattice& li = config.lattice(ip);
    const Lattice& lj = config.lattice(j);
    Lattice lk = dvr::intersect(li.scaled(config.n(ip, j)), lj.scaled(1));
    auto k = config.find_class(lk);
    if (!k) throw InvalidInput("configuration is missing a class needed by the geometric test");
    return config.n(i, *k) + config.n(*k, ip) == config.n(i, ip);
}

}  // namespace lq::quiver
