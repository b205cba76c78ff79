#include "lq/rep/tree_rep.hpp"

#include <algorithm>

#include "lq/error.hpp"

namespace lq::rep {

TreeRep::TreeRep(QuiverRep m) : m_(std::move(m)) {
    auto tree = m_.quiver.double_tree();
    if (!tree) throw InvalidInput("representation quiver is not a double tree");
    geom_ = quiver::DoubleTreeGeom(*tree);
    for (const auto& e : geom_.edges()) edge_maps_.push_back(m_.map(e.s, e.t));
    const std::size_t n = size();
    pair_maps_.assign(n, std::vector<FieldMatrix>(n));
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t w = 0; w < n; ++w) {
            auto path = geom_.tree().path(static_cast<int>(u), static_cast<int>(w));
            pair_maps_[u][w] = m_.path_map(quiver::Path(path.begin(), path.end()));
        }
    lli_ = local_linear_independence(m_);
}

bool Decomposition::projective() const {
    return std::all_of(edge.begin(), edge.end(), [](int r) { return r == 0; });
}

namespace {

Subspace kernel_in(const TreeRep& m, std::size_t e, const Subspace& u) {
    return u.intersect(Subspace::row_space(m.edge_map(e).kernel()));
}

void require_decomposable(const TreeRep& m, const SubRep& u) {
    if (!m.locally_independent()) throw NotLocallyIndependent("representation is not locally linearly independent");
    if (!is_subrep(m.rep(), u)) throw NotASubrepresentation("input is not a subrepresentation");
}

}  // namespace

Decomposition decompose(const TreeRep& m, const SubRep& u) {
    require_decomposable(m, u);
    const auto& g = m.geom();
    Decomposition dec;
    dec.vertex.assign(m.size(), 0);
    dec.edge.assign(g.edges().size(), 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
        int r = static_cast<int>(u.spaces[v].dim());
        for (auto e : g.outgoing(v)) r -= static_cast<int>(kernel_in(m, e, u.spaces[v]).dim());
        dec.vertex[v] = r;
    }
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        const auto& oe = g.edge(e);
        int ker = static_cast<int>(kernel_in(m, e, u.spaces[oe.s]).dim());
        int back = static_cast<int>(u.spaces[oe.t].image(m.edge_map(oe.reverse)).dim());
        dec.edge[e] = ker - back;
    }
    return dec;
}

bool is_projective(const TreeRep& m, const SubRep& u) { return decompose(m, u).projective(); }

std::vector<std::size_t> dims_from_decomposition(const quiver::DoubleTreeGeom& g, const Decomposition& dec) {
    std::vector<std::size_t> dims(g.vertex_count(), 0);
    int total_p = 0;
    for (int r : dec.vertex) total_p += r;
    for (std::size_t w = 0; w < dims.size(); ++w) {
        int d = total_p;
        for (std::size_t e = 0; e < g.edges().size(); ++e)
            if (g.in_side(e, w)) d += dec.edge[e];
        dims[w] = static_cast<std::size_t>(d);
    }
    return dims;
}

SubRep generated_subrep(const TreeRep& m, const std::vector<std::pair<std::size_t, Vec>>& vectors) {
    SubRep out;
    for (std::size_t w = 0; w < m.size(); ++w) {
        std::vector<Vec> images;
        for (const auto& [v, x] : vectors) images.push_back(m.pair_map(v, w).apply(x));
        out.spaces.push_back(Subspace::span(m.prime(), m.rep().dims[w], images));
    }
    return out;
}

std::vector<Generator> adapted_generators(const TreeRep& m, const SubRep& u) {
    require_decomposable(m, u);
    const auto& g = m.geom();
    std::vector<Generator> gens;
    for (std::size_t v = 0; v < m.size(); ++v) {
        const Subspace& uv = u.spaces[v];
        Subspace kernels(m.prime(), uv.ambient());
        for (auto e : g.outgoing(v)) {
            Subspace k = kernel_in(m, e, uv);
            kernels = kernels + k;
            Subspace back = u.spaces[g.edge(e).t].image(m.edge_map(g.edge(e).reverse));
            for (auto& x : back.complement_in(k)) gens.push_back({v, x, e});
        }
        for (auto& x : kernels.complement_in(uv)) gens.push_back({v, x, std::nullopt});
    }
    // The pieces generated by single generators must add up to U without overlap.
    std::vector<std::pair<std::size_t, Vec>> all;
    for (const auto& gen : gens) all.push_back({gen.vertex, gen.vector});
    SubRep span = generated_subrep(m, all);
    for (std::size_t w = 0; w < m.size(); ++w) {
        std::size_t pieces = 0;
        for (const auto& gen : gens) pieces += is_zero_vector(m.pair_map(gen.vertex, w).apply(gen.vector)) ? 0 : 1;
        if (!(span.spaces[w] == u.spaces[w]) || pieces != u.spaces[w].dim())
            throw InternalError("adapted generators do not split the subrepresentation");
    }
    return gens;
}

SubRep lift_to_subrep(const TreeRep& m, std::size_t r, const std::vector<std::optional<Subspace>>& prescribed) {
    if (!m.locally_independent()) throw NotLocallyIndependent("lifting needs local linear independence");
    if (prescribed.size() != m.size()) throw InvalidInput("prescription has the wrong number of vertices");
    const std::size_t n = m.size();
    bool any = false;
    for (const auto& v : prescribed)
        if (v) {
            any = true;
            if (v->dim() != r) throw InvalidInput("prescribed subspaces must have dimension r");
        }
    if (!any) throw InvalidInput("prescribe at least one vertex");
    SubRep w;
    for (std::size_t u = 0; u < n; ++u) {
        Subspace acc = Subspace::full(m.prime(), m.rep().dims[u]);
        for (std::size_t v = 0; v < n; ++v)
            if (prescribed[v]) acc = acc.intersect(Subspace::preimage(m.pair_map(u, v), *prescribed[v]));
        if (acc.dim() < r) throw InvalidInput("prescribed data does not extend: some W_u has dimension below r");
        w.spaces.push_back(std::move(acc));
    }
    const auto& g = m.geom();
    while (true) {
        std::optional<std::size_t> grow;
        for (std::size_t e = 0; e < g.edges().size() && !grow; ++e) {
            const auto& oe = g.edge(e);
            if (w.spaces[oe.s].dim() == r && w.spaces[oe.t].dim() > r) grow = oe.t;
        }
        if (!grow) break;
        std::size_t u2 = *grow;
        Subspace incoming(m.prime(), m.rep().dims[u2]);
        for (auto e : g.incoming(u2)) incoming = incoming + w.spaces[g.edge(e).s].image(m.edge_map(e));
        if (incoming.dim() > r) throw InternalError("neighbour images exceed dimension r while lifting");
        auto extra = incoming.greedy_extension(w.spaces[u2].basis_vectors(), r);
        std::vector<Vec> basis = incoming.basis_vectors();
        basis.insert(basis.end(), extra.begin(), extra.end());
        w.spaces[u2] = Subspace::span(m.prime(), m.rep().dims[u2], basis);
    }
    for (std::size_t u = 0; u < n; ++u)
        if (w.spaces[u].dim() != r) throw InternalError("lift did not reach dimension r everywhere");
    if (!is_subrep(m.rep(), w)) throw InternalError("lift is not a subrepresentation");
    for (std::size_t v = 0; v < n; ++v)
        if (prescribed[v] && !(w.spaces[v] == *prescribed[v])) throw InternalError("lift changed a prescribed subspace");
    return w;
}

}  // namespace lq::rep
