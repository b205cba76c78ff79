#include "lq/dvr/configuration.hpp"

#include <algorithm>
#include <set>

#include "lq/error.hpp"

namespace lq::dvr {

LatticeConfiguration::LatticeConfiguration(const std::vector<Lattice>& lattices) {
    if (lattices.empty()) throw InvalidInput("a configuration needs at least one lattice");
    p_ = lattices.front().prime();
    d_ = lattices.front().dim();
    for (const auto& l : lattices) {
        if (l.dim() != d_ || l.prime() != p_) throw InvalidInput("lattices of mixed dimension or prime");
        Lattice rep = normalized(l);
        std::optional<std::size_t> hit;
        for (std::size_t k = 0; k < reps_.size() && !hit; ++k)
            if (homothety_shift(rep, reps_[k])) hit = k;
        if (!hit) {
            hit = reps_.size();
            reps_.push_back(std::move(rep));
        }
        merge_.push_back(*hit);
    }
    const std::size_t m = reps_.size();
    n_.assign(m, std::vector<int>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) n_[i][j] = n_min(reps_[i], reps_[j]);
}

std::optional<std::size_t> LatticeConfiguration::find_class(const Lattice& l) const {
    for (std::size_t k = 0; k < reps_.size(); ++k)
        if (homothety_shift(l, reps_[k])) return k;
    return std::nullopt;
}

FieldMatrix LatticeConfiguration::induced_map(std::size_t i, std::size_t j) const {
    KMatrix m = reps_.at(j).coordinates(reps_.at(i).basis().shifted(n_[i][j]));
    if (!m.in_ring()) throw InternalError("t^n L_i is not contained in L_j");
    return m.residue();
}

namespace {

// Representatives of every class [L_i ∩ t^k L_j] for k between the extreme exponents.
std::vector<Lattice> pair_intersections(const Lattice& li, const Lattice& lj) {
    auto prof = smith_pair(li, lj);
    auto [lo, hi] = std::minmax_element(prof.exponents.begin(), prof.exponents.end());
    std::vector<Lattice> out;
    for (int k = *lo; k <= *hi; ++k) out.push_back(intersect(li, lj.scaled(k)));
    return out;
}

}  // namespace

bool is_convex(const LatticeConfiguration& config) {
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = i + 1; j < config.size(); ++j)
            for (const auto& l : pair_intersections(config.lattice(i), config.lattice(j)))
                if (!config.find_class(l)) return false;
    return true;
}

// Saturation: add every missing class on the segment between two present classes until
// nothing new appears. Terminates because the closure is finite.
LatticeConfiguration convex_closure(const LatticeConfiguration& config) {
    std::vector<Lattice> classes = config.lattices();
    auto known = [&](const Lattice& l) {
        return std::any_of(classes.begin(), classes.end(), [&](const Lattice& c) { return homothety_shift(l, c).has_value(); });
    };
    std::set<std::pair<std::size_t, std::size_t>> done;
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j) {
                if (!done.insert({i, j}).second) continue;
                for (auto& l : convex_hull_pair(classes[i], classes[j]))
                    if (!known(l)) {
                        classes.push_back(normalized(l));
                        grew = true;
                    }
            }
    }
    return LatticeConfiguration(classes);
}

LatticeConfiguration config_from_exponents(std::uint32_t p, const ExponentMatrix& exponents) {
    if (exponents.empty()) throw InvalidInput("empty exponent matrix");
    std::vector<Lattice> ls;
    for (const auto& row : exponents) {
        if (row.size() != exponents.front().size() || row.empty()) throw InvalidInput("ragged exponent matrix");
        ls.push_back(Lattice::diagonal(p, row));
    }
    return LatticeConfiguration(ls);
}

ExponentMatrix tree_exponents(const Tree& tree, int root) {
    const std::size_t n = tree.size();
    if (root < 0 || static_cast<std::size_t>(root) >= n) throw InvalidInput("root is not a vertex of the tree");
    ExponentMatrix a(n, std::vector<int>(n, 0));
    for (std::size_t u = 0; u < n; ++u) {
        auto to_root = tree.path(static_cast<int>(u), root);
        std::set<std::pair<int, int>> root_edges;
        for (std::size_t k = 0; k + 1 < to_root.size(); ++k)
            root_edges.insert(std::minmax(to_root[k], to_root[k + 1]));
        for (std::size_t v = 0; v < n; ++v) {
            auto to_v = tree.path(static_cast<int>(u), static_cast<int>(v));
            int shared = 0;
            for (std::size_t k = 0; k + 1 < to_v.size(); ++k)
                shared += static_cast<int>(root_edges.count(std::minmax(to_v[k], to_v[k + 1])));
            a[u][v] = shared;
        }
    }
    return a;
}

LatticeConfiguration config_from_tree(std::uint32_t p, const Tree& tree, int root) {
    return config_from_exponents(p, tree_exponents(tree, root));
}

}  // namespace lq::dvr
