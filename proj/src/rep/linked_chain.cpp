#include "lq/rep/linked_chain.hpp"

#include "lq/error.hpp"

namespace lq::rep {

namespace {

void validate(const ChainData& c) {
    if (c.g.size() != c.h.size() || c.g.empty()) throw InvalidInput("chain needs matching g and h maps, at least one link");
    for (std::size_t i = 0; i < c.g.size(); ++i) {
        for (const auto* m : {&c.g[i], &c.h[i]})
            if (m->rows() != c.d || m->cols() != c.d || m->prime() != c.p) throw InvalidInput("chain maps must be d x d over F_p");
        if (!(c.g[i] * c.h[i]).is_zero() || !(c.h[i] * c.g[i]).is_zero())
            throw InvalidInput("link " + std::to_string(i) + ": g and h do not compose to zero");
        std::size_t rg = c.g[i].rank(), rh = c.h[i].rank();
        if (rg + rh != c.d) throw InvalidInput("link " + std::to_string(i) + ": rank g + rank h differs from d");
        if (rg == c.d || rh == c.d) throw InvalidInput("link " + std::to_string(i) + " is an isomorphism, so its two classes coincide");
    }
    for (std::size_t i = 0; i + 1 < c.g.size(); ++i) {
        if ((c.g[i + 1] * c.g[i]).rank() != c.g[i].rank()) throw InvalidInput("rank drops along g at link " + std::to_string(i));
        if ((c.h[i] * c.h[i + 1]).rank() != c.h[i + 1].rank()) throw InvalidInput("rank drops along h at link " + std::to_string(i));
    }
}

}  // namespace

ChainEquivalence linked_chain_equivalence(const ChainData& c) {
    validate(c);
    const std::size_t n = c.length();
    const std::uint32_t p = c.p;
    // Generators at E_j: a complement of ker g_j + ker h_{j-1}.
    std::vector<std::vector<Vec>> gens(n);
    for (std::size_t j = 0; j < n; ++j) {
        Subspace kernels(p, c.d);
        if (j + 1 < n) kernels = kernels + Subspace::row_space(c.g[j].kernel());
        if (j > 0) kernels = kernels + Subspace::row_space(c.h[j - 1].kernel());
        gens[j] = kernels.complement_in(Subspace::full(p, c.d));
    }
    // Transport each generator back to E_0 along h.
    std::vector<Vec> columns;
    std::vector<std::size_t> group;
    for (std::size_t j = 0; j < n; ++j)
        for (Vec x : gens[j]) {
            for (std::size_t k = j; k-- > 0;) x = c.h[k].apply(x);
            columns.push_back(std::move(x));
            group.push_back(j);
        }
    if (columns.size() != c.d || Subspace::span(p, c.d, columns).dim() != c.d)
        throw InvalidInput("chain data does not produce a global basis");
    ChainEquivalence out;
    out.basis = dvr::KMatrix::lift(FieldMatrix::from_vectors(p, c.d, columns).transpose());
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<int> row;
        for (auto j : group) row.push_back(-static_cast<int>(std::min(i, j)));
        out.exponents.push_back(row);
    }
    std::vector<dvr::Lattice> ls;
    for (const auto& row : out.exponents) ls.emplace_back(out.basis * dvr::KMatrix::monomial_diagonal(p, row));
    out.config = dvr::LatticeConfiguration(ls);
    if (out.config.size() != n) throw InternalError("chain lattices are not pairwise distinct");

    QuiverRep chain;
    chain.quiver = quiver::WeightedQuiver::from_configuration(out.config);
    chain.p = p;
    chain.dims.assign(n, c.d);
    for (const auto& a : chain.quiver.arrows()) {
        if (a.to == a.from + 1) chain.maps.push_back(c.g[a.from]);
        else if (a.from == a.to + 1) chain.maps.push_back(c.h[a.to]);
        else throw InternalError("chain configuration has an arrow between non-neighbours");
    }
    if (chain.quiver.arrows().size() != 2 * (n - 1)) throw InternalError("chain configuration quiver is not a doubled path");
    out.chain_rep = std::move(chain);
    if (!same_rank_profile(build_M(out.config), out.chain_rep, n + 1))
        throw InternalError("lattice chain does not reproduce the linked chain");
    return out;
}

}  // namespace lq::rep
