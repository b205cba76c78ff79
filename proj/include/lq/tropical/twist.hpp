#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lq/dvr/configuration.hpp"

namespace lq::tropical {

using Multidegree = std::vector<int>;
using TwistVector = std::vector<int>;  // number of twists at each vertex

// Dual graph of a nodal curve: a connected loopless multigraph given by its edge counts.
class DualGraph {
public:
    DualGraph() = default;
    explicit DualGraph(std::vector<std::vector<int>> multiplicity);
    static DualGraph complete(std::size_t n, int edges_per_pair);

    std::size_t size() const { return m_.size(); }
    int edges(std::size_t i, std::size_t j) const { return m_[i][j]; }
    int degree(std::size_t v) const;
    const std::vector<std::vector<int>>& multiplicity() const { return m_; }

private:
    std::vector<std::vector<int>> m_;
};

Multidegree twist(const DualGraph& g, const Multidegree& w, std::size_t v);
Multidegree negative_twist(const DualGraph& g, const Multidegree& w, std::size_t v);
// w0 after x_v twists at every vertex v, i.e. w0 - L x for the Laplacian L.
Multidegree twist_by(const DualGraph& g, const Multidegree& w0, const TwistVector& x);

// Existence of an ordering v = u_0, u_1, ... of all vertices in which each u_k is negative
// after the negative twists at u_0..u_{k-1}. Searched over vertex subsets with memoisation.
bool is_concentrated(const DualGraph& g, const Multidegree& w, std::size_t v);

// The twist vector taking w0 to w, shifted to have minimum 0; empty when w is not reachable.
std::optional<TwistVector> twist_coordinates(const DualGraph& g, const Multidegree& w0, const Multidegree& w);

// Row i holds a_{i,j}: w_{v_i} is w0 twisted a_{i,j} times at v_j. Rows have minimum 0.
struct TwistCoeffs {
    dvr::ExponentMatrix a;
    std::size_t size() const { return a.size(); }
};
// Throws InvalidInput when some w_v is not reachable from w0.
TwistCoeffs coefficients_of(const DualGraph& g, const Multidegree& w0, const std::vector<Multidegree>& wv);
// Applies k further negative twists at v to every w_v.
TwistCoeffs concentrate_further(const TwistCoeffs& coeffs, int k);

// Twist vectors (minimum 0) of the multidegrees from which every w_{v_i} is reached without
// twisting v_i: x_i - x_j >= a_{i,i} - a_{i,j}. Sorted. Throws InvalidInput on an empty system.
std::vector<TwistVector> twist_closure_coordinates(const TwistCoeffs& coeffs);
std::vector<Multidegree> twist_closure_vertices(const DualGraph& g, const Multidegree& w0, const TwistCoeffs& coeffs);

// a_{k,i} - a_{k,j} >= a_{i,i} - a_{i,j} for all i, j, k.
bool closure_condition(const TwistCoeffs& coeffs);

// Points are taken modulo the all-ones vector and returned with minimum 0, sorted.
TwistVector normalize_mod_ones(TwistVector x);
// Closure under min(p, q + mu) over integers mu, iterated to a fixpoint.
std::vector<TwistVector> integral_tropical_hull(const std::vector<TwistVector>& points);

}  // namespace lq::tropical
