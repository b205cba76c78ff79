#pragma once

#include <cstdint>
#include <vector>

#include "lq/tropical/curve.hpp"

namespace lq::tropical {

// Three rational components with n_{i,j} nodes between Z_i and Z_j, multidegree w0 with
// w0_i < 2 min_{j != i} n_{i,j}, w_{v_i} the negative twist of w0 at v_i, and the divisor
// of multidegree sum_i (sum_{j != i} n_{i,j} - w0_i - 1) e_i.
struct CycleExample {
    int n12 = 1, n13 = 1, n23 = 1;
    RationalNodalCurve curve;
    Multidegree w0;
    Multidegree divisor;
    std::vector<Multidegree> wv;
    TwistCoeffs coeffs;
};

bool cycle_admissible(int n12, int n13, int n23, const Multidegree& w0);
// Node points are 0, 1, 2, ... in order on each component. Throws InvalidInput when some
// component carries at least p nodes, or when w0 is not admissible.
CycleExample cycle_curve_example(std::uint32_t p, int n12, int n13, int n23, const Multidegree& w0);

struct CycleReport {
    std::vector<std::size_t> h0_dims;  // one per closure vertex
    std::size_t expected_h0 = 0;
    bool h1_vanishes = true;
    bool closure_matches = true;       // the seven listed multidegrees
    bool boundary_isomorphisms = true;
    std::vector<std::size_t> kernel_dims;  // ker f_{w0 -> w_{v_i}}
    std::vector<std::size_t> expected_kernel_dims;
    bool images_are_kernels = true;    // f_{w_{v_i} -> w0} has image ker f_{w0 -> w_{v_i}}
    bool kernels_independent = true;   // and the three kernels form a direct sum of everything
    SpecialFiber fiber;
    GammaS gamma;
    bool star = false;                 // center is the class of w0
    bool chain = false;

    bool ok() const;
};

CycleReport verify_cycle_example(const CycleExample& ex);

}  // namespace lq::tropical
