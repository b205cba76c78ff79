#include "lq/strata/strata.hpp"

#include <algorithm>
#include <functional>

#include "lq/error.hpp"

namespace lq::strata {

StrataTuple phi(const TreeRep& m, const SubRep& u) {
    if (!is_subrep(m.rep(), u)) throw NotASubrepresentation("phi needs a subrepresentation");
    StrataTuple out;
    const auto& g = m.geom();
    for (std::size_t e = 0; e < g.edges().size(); ++e)
        out.push_back(static_cast<int>(u.spaces[g.edge(e).s].image(m.edge_map(e)).dim()));
    return out;
}

std::vector<int> ambient_multiplicities(const TreeRep& m) {
    SubRep full;
    for (auto d : m.rep().dims) full.spaces.push_back(Subspace::full(m.prime(), d));
    return rep::decompose(m, full).vertex;
}

namespace {
int side_sum(const DoubleTreeGeom& g, std::size_t e, const std::vector<int>& values) {
    int s = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.in_side(e, v)) s += values[v];
    return s;
}
}  // namespace

bool admissible(const DoubleTreeGeom& g, const std::vector<int>& d, int r, const StrataTuple& t) {
    if (t.size() != g.edges().size() || d.size() != g.vertex_count()) throw InvalidInput("tuple or multiplicities have the wrong length");
    for (std::size_t e = 0; e < t.size(); ++e) {
        int back = r - t[g.edge(e).reverse];
        if (t[e] < 0 || t[e] > back || back > side_sum(g, e, d)) return false;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int s = r;
        for (auto e : g.outgoing(v)) s -= r - t[e];
        if (s < 0) return false;
    }
    return true;
}

std::vector<StrataTuple> enumerate_strata(const DoubleTreeGeom& g, const std::vector<int>& d, int r) {
    if (r < 0) throw InvalidInput("negative rank");
    std::vector<StrataTuple> out;
    StrataTuple t(g.edges().size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == t.size()) {
            if (admissible(g, d, r, t)) out.push_back(t);
            return;
        }
        for (int x = 0; x <= r; ++x) {
            t[k] = x;
            rec(k + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<std::vector<int>> components(const DoubleTreeGeom& g, const std::vector<int>& d, int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> rv(g.vertex_count(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
        if (v + 1 == rv.size()) {
            rv[v] = left;
            for (std::size_t e = 0; e < g.edges().size(); ++e)
                if (side_sum(g, e, rv) > side_sum(g, e, d)) return;
            out.push_back(rv);
            return;
        }
        for (int x = left; x >= 0; --x) {
            rv[v] = x;
            rec(v + 1, left - x);
        }
    };
    if (!rv.empty()) rec(0, r);
    std::sort(out.begin(), out.end());
    return out;
}

StrataTuple component_image(const DoubleTreeGeom& g, const std::vector<int>& rv) {
    StrataTuple t;
    for (std::size_t e = 0; e < g.edges().size(); ++e) t.push_back(side_sum(g, e, rv));
    return t;
}

Decomposition decomposition_of(const DoubleTreeGeom& g, int r, const StrataTuple& t) {
    Decomposition dec;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        int s = r;
        for (auto e : g.outgoing(v)) s -= r - t[e];
        dec.vertex.push_back(s);
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) dec.edge.push_back(r - t[e] - t[g.edge(e).reverse]);
    return dec;
}

// Hom between indecomposables: Hom(P, P) = 1, Hom(R_e, P_v) = [v not in A_e],
// Hom(P_v, R_e) = [v in A_e], Hom(R_e1, R_e2) = [A_e1 ⊆ A_e2]. The last case is the
// one checked against an explicit linear-algebra computation in the tests: End(R_e)
// contains the identity, so it cannot vanish.
int hom_table(const DoubleTreeGeom& g, const Decomposition& a, const Decomposition& b) {
    const std::size_t nv = g.vertex_count(), ne = g.edges().size();
    auto contained = [&](std::size_t e1, std::size_t e2) {
        for (std::size_t v = 0; v < nv; ++v)
            if (g.in_side(e1, v) && !g.in_side(e2, v)) return false;
        return true;
    };
    long total = 0;
    for (std::size_t v = 0; v < nv; ++v)
        for (std::size_t w = 0; w < nv; ++w) total += long{a.vertex[v]} * b.vertex[w];
    for (std::size_t e = 0; e < ne; ++e)
        for (std::size_t v = 0; v < nv; ++v) {
            if (!g.in_side(e, v)) total += long{a.edge[e]} * b.vertex[v];
            if (g.in_side(e, v)) total += long{a.vertex[v]} * b.edge[e];
        }
    for (std::size_t e1 = 0; e1 < ne; ++e1)
        for (std::size_t e2 = 0; e2 < ne; ++e2)
            if (contained(e1, e2)) total += long{a.edge[e1]} * b.edge[e2];
    return static_cast<int>(total);
}

int stratum_dim(const DoubleTreeGeom& g, const std::vector<int>& d, const Decomposition& dec) {
    Decomposition ambient{d, std::vector<int>(g.edges().size(), 0)};
    return hom_table(g, dec, ambient) - hom_table(g, dec, dec);
}

bool closure_leq(const StrataTuple& a, const StrataTuple& b) {
    if (a.size() != b.size()) throw InvalidInput("tuples of different lengths");
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k]) return false;
    return true;
}

std::vector<StrataTuple> maximal_elements(const std::vector<StrataTuple>& tuples) {
    std::vector<StrataTuple> out;
    for (const auto& a : tuples) {
        bool dominated = false;
        for (const auto& b : tuples) dominated = dominated || (a != b && closure_leq(a, b));
        if (!dominated) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

Vec random_combination(const TreeRep& m, std::size_t u, const std::vector<rep::Generator>& basis,
                       const std::function<bool(std::size_t)>& allowed, std::mt19937_64& rng) {
    Zp f{m.prime()};
    Vec acc(m.rep().dims[u], 0);
    for (const auto& z : basis) {
        if (!allowed(z.vertex)) continue;
        Fp c = static_cast<Fp>(rng() % m.prime());
        Vec img = m.pair_map(z.vertex, u).apply(z.vector);
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = f.add(acc[k], f.mul(c, img[k]));
    }
    return acc;
}

}  // namespace

SubRep realize_stratum(const TreeRep& m, int r, const StrataTuple& tuple, std::mt19937_64& rng, int attempts) {
    const auto& g = m.geom();
    auto d = ambient_multiplicities(m);
    if (!admissible(g, d, r, tuple)) throw InvalidInput("tuple is not admissible");
    Decomposition dec = decomposition_of(g, r, tuple);
    SubRep full;
    for (auto dim : m.rep().dims) full.spaces.push_back(Subspace::full(m.prime(), dim));
    auto basis = rep::adapted_generators(m, full);  // global basis: P generators only
    for (int attempt = 0; attempt < attempts; ++attempt) {
        std::vector<std::pair<std::size_t, Vec>> gens;
        for (std::size_t u = 0; u < m.size(); ++u) {
            for (auto e : g.incoming(u))
                for (int k = 0; k < dec.edge[e]; ++k)
                    gens.push_back({u, random_combination(m, u, basis, [&](std::size_t v) { return g.in_side(e, v); }, rng)});
            for (int k = 0; k < dec.vertex[u]; ++k)
                gens.push_back({u, random_combination(m, u, basis, [](std::size_t) { return true; }, rng)});
        }
        SubRep cand = rep::generated_subrep(m, gens);
        bool dims_ok = std::all_of(cand.spaces.begin(), cand.spaces.end(),
                                   [&](const Subspace& s) { return s.dim() == static_cast<std::size_t>(r); });
        if (dims_ok && phi(m, cand) == tuple) return cand;
    }
    throw RealizationFailed("no point of the stratum found over F_" + std::to_string(m.prime()) + " after " +
                            std::to_string(attempts) + " random draws");
}

SubRep specialize(const TreeRep& m, const SubRep& u, std::size_t iota, std::mt19937_64& rng) {
    const auto& g = m.geom();
    if (iota >= g.edges().size()) throw InvalidInput("edge index out of range");
    const std::size_t back = g.edge(iota).reverse;
    auto gens = rep::adapted_generators(m, u);
    auto find = [&](std::size_t e) {
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (gens[k].edge == e) return k;
        throw InvalidInput("subrepresentation has no R summand on the requested edge pair");
    };
    std::size_t ia = find(iota), ib = find(back);
    const Vec a = gens[ia].vector, a2 = gens[ib].vector;
    const std::size_t s = g.edge(iota).s;
    auto sol = m.edge_map(iota).solve(a2);
    if (!sol) throw InternalError("R generator on the reverse edge is not in the image of f_iota");
    Zp f{m.prime()};
    // Randomise b inside its coset of ker f_iota.
    FieldMatrix ker = m.edge_map(iota).kernel();
    Vec b = *sol;
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        Fp c = static_cast<Fp>(rng() % m.prime());
        for (std::size_t k = 0; k < b.size(); ++k) b[k] = f.add(b[k], f.mul(c, ker(i, k)));
    }
    StrataTuple target = phi(m, u);
    target[iota] += 1;
    std::vector<Fp> scalars;
    for (Fp c = 1; c < m.prime(); ++c) scalars.push_back(c);
    std::shuffle(scalars.begin(), scalars.end(), rng);
    for (Fp c : scalars) {
        std::vector<std::pair<std::size_t, Vec>> vecs;
        for (std::size_t k = 0; k < gens.size(); ++k)
            if (k != ia && k != ib) vecs.push_back({gens[k].vertex, gens[k].vector});
        Vec x = a;
        for (std::size_t k = 0; k < x.size(); ++k) x[k] = f.add(x[k], f.mul(c, b[k]));
        vecs.push_back({s, x});
        SubRep n = rep::generated_subrep(m, vecs);
        if (n.dims() == u.dims() && phi(m, n) == target) return n;
    }
    throw RealizationFailed("no scalar in F_" + std::to_string(m.prime()) + " gives the specialisation");
}

}  // namespace lq::strata
