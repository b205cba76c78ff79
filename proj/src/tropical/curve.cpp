#include "lq/tropical/curve.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "lq/error.hpp"
#include "lq/rep/tree_rep.hpp"

namespace lq::tropical {

namespace {

Fp evaluate(const Zp& f, const Vec& coeffs, Fp x) {
    Fp acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = f.add(f.mul(acc, x), coeffs[k]);
    return acc;
}

DualGraph graph_of(std::size_t n, const std::vector<Node>& nodes) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& nd : nodes) {
        if (nd.a >= n || nd.b >= n) throw InvalidInput("node refers to a missing component");
        if (nd.a == nd.b) throw InvalidInput("self-nodes are not supported");
        ++m[nd.a][nd.b];
        ++m[nd.b][nd.a];
    }
    return DualGraph(std::move(m));
}

}  // namespace

RationalNodalCurve::RationalNodalCurve(std::uint32_t p, std::size_t components, std::vector<Node> nodes)
    : p_(p), n_(components), nodes_(std::move(nodes)), graph_(graph_of(components, nodes_)) {
    if (!is_prime(p)) throw InvalidInput("characteristic must be prime");
    const Zp f{p};
    std::vector<std::vector<Fp>> points(n_);
    for (auto& nd : nodes_) {
        nd.x %= p;
        nd.y %= p;
        points[nd.a].push_back(nd.x);
        points[nd.b].push_back(nd.y);
    }
    for (auto& pts : points) {
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
            throw InvalidInput("node points on a component must be distinct; enlarge the field");
    }
    twist_poly_.assign(n_, std::vector<dvr::Poly>(n_));
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v) {
            if (u == v) continue;
            dvr::Poly g{1};
            for (const auto& nd : nodes_) {
                if (nd.a == u && nd.b == v) g = dvr::poly::mul(g, {f.neg(nd.y), 1}, f);
                if (nd.b == u && nd.a == v) g = dvr::poly::mul(g, {f.neg(nd.x), 1}, f);
            }
            twist_poly_[u][v] = g;
        }
    beta_.assign(n_, std::vector<Fp>(nodes_.size(), 1));
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const Node& nd = nodes_[k];
        Fp others = 1;
        for (std::size_t u = 0; u < n_; ++u) {
            if (u == nd.a || u == nd.b) continue;
            Fp num = evaluate(f, twist_poly_[u][nd.a], nd.x);
            Fp den = evaluate(f, twist_poly_[u][nd.b], nd.y);
            beta_[u][k] = f.mul(num, f.inv(den));
            others = f.mul(others, beta_[u][k]);
        }
        beta_[nd.a][k] = f.inv(others);
    }
}

LineBundle trivial_gluing(const RationalNodalCurve& c, Multidegree degree) {
    if (degree.size() != c.size()) throw InvalidInput("multidegree length does not match the curve");
    return LineBundle{std::move(degree), std::vector<Fp>(c.nodes().size(), 1)};
}

LineBundle bundle_at(const RationalNodalCurve& c, const LineBundle& base, const TwistVector& x) {
    const Zp f{c.prime()};
    LineBundle out{twist_by(c.dual_graph(), base.degree, x), base.gluing};
    for (std::size_t k = 0; k < out.gluing.size(); ++k)
        for (std::size_t u = 0; u < c.size(); ++u) {
            Fp b = c.gluing_factor(u, k);
            Fp factor = x[u] >= 0 ? f.pow(b, static_cast<std::uint64_t>(x[u])) : f.inv(f.pow(b, static_cast<std::uint64_t>(-x[u])));
            out.gluing[k] = f.mul(out.gluing[k], factor);
        }
    return out;
}

Vec SectionSpace::coordinates(const Vec& v) const {
    if (dim() == 0) {
        if (!is_zero_vector(v)) throw InternalError("vector is not a global section");
        return {};
    }
    auto sol = basis.transpose().solve(v);
    if (!sol) throw InternalError("vector is not a global section");
    return *sol;
}

SectionSpace h0(const RationalNodalCurve& c, const LineBundle& bundle) {
    const Zp f{c.prime()};
    SectionSpace s;
    s.bundle = bundle;
    s.offset.resize(c.size());
    for (std::size_t v = 0; v < c.size(); ++v) {
        s.offset[v] = s.ambient;
        if (bundle.degree[v] >= 0) s.ambient += static_cast<std::size_t>(bundle.degree[v]) + 1;
        s.euler_characteristic += bundle.degree[v] + 1;
    }
    s.euler_characteristic -= static_cast<long long>(c.nodes().size());
    FieldMatrix eqs(c.prime(), c.nodes().size(), s.ambient);
    for (std::size_t k = 0; k < c.nodes().size(); ++k) {
        const Node& nd = c.nodes()[k];
        Fp pw = 1;
        for (int e = 0; e <= bundle.degree[nd.a]; ++e, pw = f.mul(pw, nd.x)) eqs(k, s.offset[nd.a] + e) = pw;
        Fp g = f.neg(bundle.gluing[k]);
        pw = 1;
        for (int e = 0; e <= bundle.degree[nd.b]; ++e, pw = f.mul(pw, nd.y))
            eqs(k, s.offset[nd.b] + e) = f.add(eqs(k, s.offset[nd.b] + e), f.mul(g, pw));
    }
    s.basis = s.ambient == 0 ? FieldMatrix(c.prime(), 0, 0) : eqs.kernel();
    return s;
}

TwistMap twist_map(const RationalNodalCurve& c, const LineBundle& bundle, std::size_t u) {
    const Zp f{c.prime()};
    TwistVector e(c.size(), 0);
    e[u] = 1;
    TwistMap tm{h0(c, bundle), h0(c, bundle_at(c, bundle, e)), {}};
    tm.matrix = FieldMatrix(c.prime(), tm.target.dim(), tm.source.dim());
    for (std::size_t col = 0; col < tm.source.dim(); ++col) {
        Vec sec = tm.source.basis.row(col);
        Vec image(tm.target.ambient, 0);
        for (std::size_t v = 0; v < c.size(); ++v) {
            if (v == u || bundle.degree[v] < 0) continue;
            auto first = sec.begin() + static_cast<std::ptrdiff_t>(tm.source.offset[v]);
            dvr::Poly piece(first, first + bundle.degree[v] + 1);
            dvr::Poly prod = dvr::poly::mul(piece, c.twist_polynomial(u, v), f);
            for (std::size_t k = 0; k < prod.size(); ++k) image[tm.target.offset[v] + k] = prod[k];
        }
        Vec coords = tm.target.coordinates(image);
        for (std::size_t r = 0; r < coords.size(); ++r) tm.matrix(r, col) = coords[r];
    }
    return tm;
}

FieldMatrix minimal_path_map(const RationalNodalCurve& c, const LineBundle& base, const TwistVector& x_from,
                             const TwistVector& x_to, const std::vector<std::size_t>& order) {
    const std::size_t n = c.size();
    TwistVector y(n);
    for (std::size_t v = 0; v < n; ++v) y[v] = x_to[v] - x_from[v];
    y = normalize_mod_ones(y);
    LineBundle cur = bundle_at(c, base, x_from);
    FieldMatrix acc = FieldMatrix::identity(c.prime(), h0(c, cur).dim());
    for (std::size_t u : order)
        for (int k = 0; k < y[u]; ++k) {
            TwistMap tm = twist_map(c, cur, u);
            acc = tm.matrix * acc;
            cur = tm.target.bundle;
        }
    if (!(cur == bundle_at(c, base, x_to))) throw InternalError("twisting along a minimal path missed its endpoint");
    return acc;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
}

int neg_min_diff(const TwistVector& from, const TwistVector& to) {
    int m = to[0] - from[0];
    for (std::size_t k = 0; k < from.size(); ++k) m = std::min(m, to[k] - from[k]);
    return -m;
}

}  // namespace

SpecialFiber special_fiber_rep(const RationalNodalCurve& c, const Multidegree& w0, const Multidegree& divisor,
                               const TwistCoeffs& coeffs) {
    if (!closure_condition(coeffs)) throw InvalidInput("twist coefficients violate a_{k,i} - a_{k,j} >= a_{i,i} - a_{i,j}");
    if (w0.size() != c.size() || divisor.size() != c.size() || coeffs.size() != c.size())
        throw InvalidInput("sizes of w0, divisor and coefficients must match the curve");
    SpecialFiber sf;
    sf.vertices = twist_closure_coordinates(coeffs);
    const std::size_t nv = sf.vertices.size();
    for (const auto& x : sf.vertices) sf.multidegrees.push_back(twist_by(c.dual_graph(), w0, x));

    Multidegree base_degree = w0;
    for (std::size_t v = 0; v < c.size(); ++v) base_degree[v] += divisor[v];
    const LineBundle base = trivial_gluing(c, base_degree);
    std::size_t dim = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        SectionSpace s = h0(c, bundle_at(c, base, sf.vertices[i]));
        if (s.h1() != 0) throw InvalidInput("h1 does not vanish on the twist closure; choose a more ample divisor");
        if (i == 0) dim = s.dim();
        if (s.dim() != dim) throw InvalidInput("h0 is not constant on the twist closure");
    }

    std::vector<std::size_t> asc(c.size());
    std::iota(asc.begin(), asc.end(), 0);
    std::vector<std::size_t> desc(asc.rbegin(), asc.rend());
    std::vector<std::vector<FieldMatrix>> t(nv, std::vector<FieldMatrix>(nv));
    std::vector<std::vector<bool>> iso(nv, std::vector<bool>(nv, false));
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j) {
            if (i == j) {
                t[i][j] = FieldMatrix::identity(c.prime(), dim);
                continue;
            }
            t[i][j] = minimal_path_map(c, base, sf.vertices[i], sf.vertices[j], asc);
            if (!(t[i][j] == minimal_path_map(c, base, sf.vertices[i], sf.vertices[j], desc)))
                throw InternalError("twisting maps along two minimal paths disagree");
            iso[i][j] = t[i][j].is_invertible();
        }

    std::vector<std::size_t> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = 0; j < nv; ++j)
            if (iso[i][j]) parent[find_root(parent, i)] = find_root(parent, j);
    std::map<std::size_t, std::size_t> root_to_class;
    sf.class_of.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        auto [it, fresh] = root_to_class.emplace(find_root(parent, i), sf.representative.size());
        if (fresh) sf.representative.push_back(i);
        sf.class_of[i] = it->second;
    }
    const std::size_t nc = sf.representative.size();

    // J[w] reduces t^{-shift}: L_w -> L_class, found by walking isomorphisms from the representative.
    sf.shift.assign(nv, 0);
    std::vector<FieldMatrix> j_map(nv);
    std::vector<bool> done(nv, false);
    for (std::size_t cl = 0; cl < nc; ++cl) {
        std::size_t rho = sf.representative[cl];
        j_map[rho] = FieldMatrix::identity(c.prime(), dim);
        done[rho] = true;
        std::deque<std::size_t> queue{rho};
        while (!queue.empty()) {
            std::size_t w = queue.front();
            queue.pop_front();
            for (std::size_t w2 = 0; w2 < nv; ++w2) {
                if (done[w2] || sf.class_of[w2] != cl) continue;
                if (iso[w][w2]) {
                    sf.shift[w2] = sf.shift[w] + neg_min_diff(sf.vertices[w], sf.vertices[w2]);
                    j_map[w2] = j_map[w] * t[w][w2].inverse();
                } else if (iso[w2][w]) {
                    sf.shift[w2] = sf.shift[w] - neg_min_diff(sf.vertices[w2], sf.vertices[w]);
                    j_map[w2] = j_map[w] * t[w2][w];
                } else {
                    continue;
                }
                done[w2] = true;
                queue.push_back(w2);
            }
        }
    }

    dvr::ExponentMatrix weights(nc, std::vector<int>(nc, 0));
    std::vector<std::vector<FieldMatrix>> class_map(nc, std::vector<FieldMatrix>(nc));
    std::vector<std::vector<bool>> known(nc, std::vector<bool>(nc, false));
    for (std::size_t w = 0; w < nv; ++w)
        for (std::size_t w2 = 0; w2 < nv; ++w2) {
            std::size_t a = sf.class_of[w], b = sf.class_of[w2];
            if (a == b || t[w][w2].is_zero()) continue;
            int n = neg_min_diff(sf.vertices[w], sf.vertices[w2]) + sf.shift[w] - sf.shift[w2];
            FieldMatrix f = j_map[w2] * t[w][w2] * j_map[w].inverse();
            if (!known[a][b]) {
                weights[a][b] = n;
                class_map[a][b] = f;
                known[a][b] = true;
            } else if (weights[a][b] != n || !(class_map[a][b] == f)) {
                throw InternalError("twisting maps between two merged classes are inconsistent");
            }
        }
    for (std::size_t a = 0; a < nc; ++a)
        for (std::size_t b = 0; b < nc; ++b)
            if (a != b && !known[a][b]) throw InternalError("no nonzero twisting map between two classes");

    sf.rep.quiver = quiver::WeightedQuiver(weights);
    sf.rep.p = c.prime();
    sf.rep.dims.assign(nc, dim);
    for (const auto& arrow : sf.rep.quiver.arrows()) sf.rep.maps.push_back(class_map[arrow.from][arrow.to]);
    return sf;
}

GammaS gamma_s_exponents(const SpecialFiber& fiber) {
    if (!fiber.rep.quiver.double_tree()) throw InvalidInput("merged quiver is not a double tree; no adapted basis");
    rep::TreeRep tr(fiber.rep);
    if (!tr.locally_independent()) throw NotLocallyIndependent("merged representation is not locally linearly independent");
    rep::SubRep full;
    for (std::size_t v = 0; v < tr.size(); ++v) full.spaces.push_back(Subspace::full(tr.prime(), fiber.rep.dims[v]));
    if (!rep::decompose(tr, full).projective())
        throw InvalidInput("merged representation is not projective; no adapted basis");
    const auto gens = rep::adapted_generators(tr, full);
    const auto& q = fiber.rep.quiver;
    GammaS out;
    out.exponents.assign(tr.size(), std::vector<int>(gens.size(), 0));
    for (std::size_t k = 0; k < tr.size(); ++k) {
        for (std::size_t g = 0; g < gens.size(); ++g) out.exponents[k][g] = q.n(gens[g].vertex, k);
        int m = *std::min_element(out.exponents[k].begin(), out.exponents[k].end());
        for (int& e : out.exponents[k]) e -= m;
    }
    out.config = dvr::config_from_exponents(tr.prime(), out.exponents);
    // Representatives may differ by homotheties, which shift n_{i,j} by c_i - c_j.
    bool weights_match = out.config.size() == tr.size();
    for (std::size_t i = 0; weights_match && i < tr.size(); ++i)
        for (std::size_t j = 0; j < tr.size(); ++j) {
            int ci = out.config.n(i, 0) - q.n(i, 0), cj = out.config.n(j, 0) - q.n(j, 0);
            if (out.config.n(i, j) - q.n(i, j) != ci - cj) weights_match = false;
        }
    if (!weights_match) throw InternalError("apartment exponents do not reproduce the class weights");
    if (!rep::same_rank_profile(rep::build_M(out.config), fiber.rep, tr.size()))
        throw InternalError("apartment exponents do not reproduce the special fiber");
    return out;
}

}  // namespace lq::tropical
