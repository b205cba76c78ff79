#pragma once

#include <optional>
#include <vector>

#include "lq/dvr/configuration.hpp"
#include "lq/graph/tree.hpp"

namespace lq::quiver {

using Path = std::vector<std::size_t>;  // vertex sequence v_0, ..., v_k

struct Arrow {
    std::size_t from;
    std::size_t to;
    bool operator==(const Arrow&) const = default;
};

// Quiver attached to a weight matrix n: an arrow i -> j exists exactly when no third
// vertex k splits the weight, n_ik + n_kj = n_ij. Arrows are listed in (from, to) order.
class WeightedQuiver {
public:
    WeightedQuiver() = default;
    explicit WeightedQuiver(dvr::ExponentMatrix weights);
    static WeightedQuiver from_configuration(const dvr::LatticeConfiguration& config) {
        return WeightedQuiver(config.n_matrix());
    }

    std::size_t size() const { return n_.size(); }
    int n(std::size_t i, std::size_t j) const { return n_[i][j]; }
    const dvr::ExponentMatrix& weights() const { return n_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::optional<std::size_t> arrow_index(std::size_t from, std::size_t to) const;
    bool has_arrow(std::size_t from, std::size_t to) const { return arrow_index(from, to).has_value(); }

    bool is_path(const Path& path) const;  // consecutive vertices joined by arrows
    int path_weight(const Path& path) const;
    // The path algebra kills a path exactly when its weight exceeds n between its ends.
    bool path_is_zero(const Path& path) const;

    // The tree T when arrows come in opposite pairs whose underlying graph is a tree.
    std::optional<Tree> double_tree() const;

    std::size_t algebra_dim() const { return size() * size(); }

private:
    dvr::ExponentMatrix n_;
    std::vector<Arrow> arrows_;
};

// Basis element l_{i,j} of the path algebra.
struct PathClass {
    std::size_t from;
    std::size_t to;
    bool operator==(const PathClass&) const = default;
};

// Product "first a, then b". Empty result means the product vanishes.
std::optional<PathClass> compose(const WeightedQuiver& q, PathClass a, PathClass b);

// Vanishing of l_{i',j} * l_{i,i'} decided from lattices alone. With k the class of
// t^{n_{i'j}} L_{i'} ∩ t L_j, the product vanishes iff l_{i,i'} factors through k,
// that is n_{ik} + n_{ki'} = n_{ii'}. Needs a convex configuration containing [k].
bool geometric_product_vanishes(const dvr::LatticeConfiguration& config, std::size_t i, std::size_t ip, std::size_t j);

}  // namespace lq::quiver
