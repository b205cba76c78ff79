#include "lq/tropical/cycle_example.hpp"

#include <algorithm>
#include <set>

#include "lq/error.hpp"
#include "lq/linalg/subspace.hpp"

namespace lq::tropical {

namespace {

std::vector<std::vector<int>> pair_counts(int n12, int n13, int n23) {
    return {{0, n12, n13}, {n12, 0, n23}, {n13, n23, 0}};
}

}  // namespace

bool cycle_admissible(int n12, int n13, int n23, const Multidegree& w0) {
    if (w0.size() != 3 || n12 < 0 || n13 < 0 || n23 < 0) return false;
    auto n = pair_counts(n12, n13, n23);
    for (std::size_t i = 0; i < 3; ++i) {
        int m = std::min(n[i][(i + 1) % 3], n[i][(i + 2) % 3]);
        if (w0[i] >= 2 * m) return false;
    }
    return true;
}

CycleExample cycle_curve_example(std::uint32_t p, int n12, int n13, int n23, const Multidegree& w0) {
    if (!cycle_admissible(n12, n13, n23, w0)) throw InvalidInput("w0 must satisfy a_i < 2 min_{j != i} n_{i,j}");
    auto n = pair_counts(n12, n13, n23);
    std::vector<Node> nodes;
    std::vector<Fp> next(3, 0);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            for (int k = 0; k < n[i][j]; ++k) nodes.push_back(Node{i, next[i]++, j, next[j]++});
    for (Fp used : next)
        if (used > p) throw InvalidInput("too many nodes on one component for this field; enlarge p");
    CycleExample ex{n12, n13, n23, RationalNodalCurve(p, 3, nodes), w0, {}, {}, {}};
    const DualGraph& g = ex.curve.dual_graph();
    for (std::size_t i = 0; i < 3; ++i) ex.divisor.push_back(g.degree(i) - w0[i] - 1);
    for (std::size_t i = 0; i < 3; ++i) ex.wv.push_back(negative_twist(g, w0, i));
    ex.coeffs = coefficients_of(g, w0, ex.wv);
    return ex;
}

bool CycleReport::ok() const {
    bool dims = std::all_of(h0_dims.begin(), h0_dims.end(), [&](std::size_t d) { return d == expected_h0; });
    return dims && h1_vanishes && closure_matches && boundary_isomorphisms && kernel_dims == expected_kernel_dims &&
           images_are_kernels && kernels_independent && star;
}

CycleReport verify_cycle_example(const CycleExample& ex) {
    const RationalNodalCurve& c = ex.curve;
    const DualGraph& g = c.dual_graph();
    CycleReport rep;
    rep.expected_h0 = static_cast<std::size_t>(ex.n12 + ex.n13 + ex.n23);

    std::set<Multidegree> expected{ex.w0};
    for (std::size_t i = 0; i < 3; ++i) {
        expected.insert(ex.wv[i]);
        expected.insert(twist(g, ex.w0, i));
    }
    auto closure = twist_closure_vertices(g, ex.w0, ex.coeffs);
    rep.closure_matches = std::set<Multidegree>(closure.begin(), closure.end()) == expected && closure.size() == 7;

    Multidegree base_degree = ex.w0;
    for (std::size_t v = 0; v < 3; ++v) base_degree[v] += ex.divisor[v];
    const LineBundle base = trivial_gluing(c, base_degree);
    auto coords = twist_closure_coordinates(ex.coeffs);
    for (const auto& x : coords) {
        SectionSpace s = h0(c, bundle_at(c, base, x));
        rep.h0_dims.push_back(s.dim());
        if (s.h1() != 0) rep.h1_vanishes = false;
    }

    const std::vector<std::size_t> order{0, 1, 2};
    const TwistVector origin(3, 0);
    const std::size_t dim = h0(c, base).dim();
    for (std::size_t i = 0; i < 3; ++i) {
        TwistVector xi(3, 0);
        xi[i] = 1;
        if (!minimal_path_map(c, base, origin, xi, order).is_invertible()) rep.boundary_isomorphisms = false;
    }
    Subspace sum(c.prime(), dim);
    std::size_t total = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        TwistVector xv = ex.coeffs.a[i];
        FieldMatrix down = minimal_path_map(c, base, origin, xv, order);
        FieldMatrix up = minimal_path_map(c, base, xv, origin, order);
        Subspace ker = Subspace::span(c.prime(), dim, down.kernel().row_vectors());
        Subspace img = Subspace::full(c.prime(), up.cols()).image(up);
        rep.kernel_dims.push_back(ker.dim());
        std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
        rep.expected_kernel_dims.push_back(static_cast<std::size_t>(g.edges(j, k)));
        if (!(img == ker)) rep.images_are_kernels = false;
        sum = sum + ker;
        total += ker.dim();
    }
    rep.kernels_independent = sum.dim() == total && total == dim;

    rep.fiber = special_fiber_rep(c, ex.w0, ex.divisor, ex.coeffs);
    rep.gamma = gamma_s_exponents(rep.fiber);
    auto tree = rep.fiber.rep.quiver.double_tree();
    const std::size_t nc = rep.fiber.classes();
    std::size_t w0_index = static_cast<std::size_t>(std::find(coords.begin(), coords.end(), origin) - coords.begin());
    int center = static_cast<int>(rep.fiber.class_of[w0_index]);
    if (tree) {
        rep.star = true;
        for (std::size_t v = 0; v < nc; ++v)
            if (static_cast<int>(v) != center && !tree->adjacent(center, static_cast<int>(v))) rep.star = false;
        rep.chain = true;
        for (std::size_t v = 0; v < nc; ++v)
            if (tree->neighbors(static_cast<int>(v)).size() > 2) rep.chain = false;
    }
    return rep;
}

}  // namespace lq::tropical
