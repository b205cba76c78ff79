#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lq/dvr/scalar.hpp"
#include "lq/linalg/field_matrix.hpp"
#include "lq/rep/representation.hpp"
#include "lq/tropical/twist.hpp"

namespace lq::tropical {

// Node joining the point x of component a with the point y of component b (a != b).
struct Node {
    std::size_t a;
    Fp x;
    std::size_t b;
    Fp y;
};

// Nodal curve whose components are coordinate lines over F_p. Node points are finite and
// pairwise distinct on each component. A line bundle is described by its multidegree and
// one gluing constant per node relating the two local trivialisations.
class RationalNodalCurve {
public:
    RationalNodalCurve(std::uint32_t p, std::size_t components, std::vector<Node> nodes);

    std::uint32_t prime() const { return p_; }
    std::size_t size() const { return n_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const DualGraph& dual_graph() const { return graph_; }

    // Product of (x - P) over the points P of Z_v lying on Z_u. Multiplication by it on Z_v
    // for v != u, and by zero on Z_u, is the twisting map at u.
    const dvr::Poly& twist_polynomial(std::size_t u, std::size_t v) const { return twist_poly_[u][v]; }
    // Factor by which twisting at u changes the gluing constant of a node. The factors of a
    // node multiply to one over all u, so twisting everywhere returns the original bundle.
    Fp gluing_factor(std::size_t u, std::size_t node) const { return beta_[u][node]; }

private:
    std::uint32_t p_;
    std::size_t n_;
    std::vector<Node> nodes_;
    DualGraph graph_;
    std::vector<std::vector<dvr::Poly>> twist_poly_;
    std::vector<std::vector<Fp>> beta_;
};

struct LineBundle {
    Multidegree degree;
    std::vector<Fp> gluing;  // s_a(x) = gluing * s_b(y) at every node
    bool operator==(const LineBundle&) const = default;
};

LineBundle trivial_gluing(const RationalNodalCurve& c, Multidegree degree);
// The bundle reached from `base` after x_u twists at each u.
LineBundle bundle_at(const RationalNodalCurve& c, const LineBundle& base, const TwistVector& x);

// Global sections as coefficient vectors: component v owns degree(v)+1 consecutive
// coordinates (none when the degree is negative), lowest power first.
struct SectionSpace {
    LineBundle bundle;
    std::vector<std::size_t> offset;
    std::size_t ambient = 0;
    FieldMatrix basis;  // rows are a basis of the sections
    long long euler_characteristic = 0;

    std::size_t dim() const { return basis.rows(); }
    long long h1() const { return static_cast<long long>(dim()) - euler_characteristic; }
    // Coordinates of an ambient vector in `basis`; throws InternalError when it is not a section.
    Vec coordinates(const Vec& ambient_vector) const;
};

SectionSpace h0(const RationalNodalCurve& c, const LineBundle& bundle);

struct TwistMap {
    SectionSpace source;
    SectionSpace target;
    FieldMatrix matrix;  // target.dim() x source.dim()
};
TwistMap twist_map(const RationalNodalCurve& c, const LineBundle& bundle, std::size_t u);

// Composite of single twists taking base twisted by x_from to base twisted by x_to along a
// minimal path, performed vertex by vertex in the given order. Requires both spaces to be
// computed from the bundles bundle_at(base, x).
FieldMatrix minimal_path_map(const RationalNodalCurve& c, const LineBundle& base, const TwistVector& x_from,
                             const TwistVector& x_to, const std::vector<std::size_t>& order);

// Representation over the classes of the twist closure: vertices w with an isomorphic
// twisting map in either direction are merged (transitively), and each class carries the
// weights n and maps of the lattice configuration it models.
struct SpecialFiber {
    std::vector<TwistVector> vertices;
    std::vector<Multidegree> multidegrees;
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> representative;  // one vertex index per class
    std::vector<int> shift;                   // L_w = t^{shift} L_{class}
    rep::QuiverRep rep;
    std::size_t classes() const { return representative.size(); }
};

// `divisor` is added to every multidegree before sections are taken. Requires closure_condition
// and constant h0 with vanishing h1 over the closure; throws InvalidInput otherwise.
SpecialFiber special_fiber_rep(const RationalNodalCurve& c, const Multidegree& w0, const Multidegree& divisor,
                               const TwistCoeffs& coeffs);

// Apartment exponents of a configuration whose ambient representation matches the special
// fiber. Throws InvalidInput when no adapted basis exists (non-projective or non-tree case).
struct GammaS {
    dvr::ExponentMatrix exponents;
    dvr::LatticeConfiguration config;
};
GammaS gamma_s_exponents(const SpecialFiber& fiber);

}  // namespace lq::tropical
