#include <random>
#include <set>

#include "doctest.h"
#include "lq/error.hpp"
#include "lq/rep/linked_chain.hpp"
#include "lq/rep/tree_rep.hpp"

using namespace lq;
using namespace lq::rep;

namespace {

std::vector<Vec> all_vectors(std::uint32_t p, std::size_t n) {
    std::vector<Vec> out{Vec(n, 0)};
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Vec> next;
        for (const auto& v : out)
            for (Fp c = 0; c < p; ++c) {
                Vec w = v;
                w[k] = c;
                next.push_back(w);
            }
        out = std::move(next);
    }
    return out;
}

FieldMatrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t r, std::size_t c) {
    FieldMatrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Fp>(rng() % p);
    return m;
}

Vec random_vector(std::mt19937_64& rng, std::uint32_t p, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = static_cast<Fp>(rng() % p);
    return v;
}

dvr::LatticeConfiguration two_point(std::uint32_t p) { return dvr::config_from_exponents(p, {{0, 0, 0, 0}, {-1, 0, 0, 0}}); }

}  // namespace

TEST_CASE("field matrices: rank, kernel, solve and inverse") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::uint32_t p = trial % 2 ? 3 : 5;
        auto a = random_matrix(rng, p, 1 + rng() % 4, 1 + rng() % 4);
        auto k = a.kernel();
        CHECK(k.rows() + a.rank() == a.cols());
        for (std::size_t i = 0; i < k.rows(); ++i) CHECK(is_zero_vector(a.apply(k.row(i))));
        Vec x = random_vector(rng, p, a.cols());
        auto sol = a.solve(a.apply(x));
        REQUIRE(sol.has_value());
        CHECK(a.apply(*sol) == a.apply(x));
        if (a.is_invertible()) CHECK(a * a.inverse() == FieldMatrix::identity(p, a.rows()));
    }
    // Rank over F_2 against an exhaustive count of the image.
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_matrix(rng, 2, 3, 4);
        std::set<Vec> image;
        for (const auto& v : all_vectors(2, 4)) image.insert(a.apply(v));
        CHECK(image.size() == (std::size_t{1} << a.rank()));
    }
}

TEST_CASE("subspace operations agree with exhaustive membership") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t p = trial % 2 ? 2 : 3;
        auto u = Subspace::row_space(random_matrix(rng, p, rng() % 3, 4));
        auto w = Subspace::row_space(random_matrix(rng, p, rng() % 4, 4));
        auto f = random_matrix(rng, p, 4, 4);
        auto meet = u.intersect(w);
        auto pre = Subspace::preimage(f, w);
        auto img = u.image(f);
        std::size_t meet_count = 0, pre_count = 0;
        for (const auto& v : all_vectors(p, 4)) {
            bool both = u.contains(v) && w.contains(v);
            CHECK(meet.contains(v) == both);
            meet_count += both;
            bool in_pre = w.contains(f.apply(v));
            CHECK(pre.contains(v) == in_pre);
            pre_count += in_pre;
            if (u.contains(v)) CHECK(img.contains(f.apply(v)));
        }
        std::size_t expected = 1;
        for (std::size_t k = 0; k < meet.dim(); ++k) expected *= p;
        CHECK(meet_count == expected);
        CHECK((u + w).dim() + meet.dim() == u.dim() + w.dim());
        CHECK(Subspace::span(p, 4, u.basis_vectors()) == u);
    }
}

TEST_CASE("ambient representation of the two-lattice example") {
    auto cfg = two_point(3);
    auto m = build_M(cfg);
    CHECK(m.dims == std::vector<std::size_t>{4, 4});
    auto rel = check_relations(cfg, m, 4);
    CHECK(rel.ok);
    CHECK(rel.mixed_pairs.empty());
    CHECK(local_linear_independence(cfg));
    TreeRep t(m);
    CHECK(t.locally_independent());
    SubRep full{{Subspace::full(3, 4), Subspace::full(3, 4)}};
    auto dec = decompose(t, full);
    CHECK(dec.vertex == std::vector<int>{3, 1});
    CHECK(dec.edge == std::vector<int>{0, 0});
    CHECK(hom_dim(m, m) == 16);  // End(P_1^3 + P_2) with every Hom(P, P) a line
}

TEST_CASE("relations hold on convex configurations and fail detection on a simplex") {
    auto chain = dvr::config_from_exponents(2, {{2, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    CHECK(check_relations(chain, build_M(chain), 4).ok);
    CHECK(local_linear_independence(chain));
    auto simplex = dvr::config_from_exponents(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    auto rel = check_relations(simplex, build_M(simplex), 4);
    CHECK(rel.ok);
    CHECK_FALSE(local_linear_independence(simplex));
    CHECK_THROWS_AS(TreeRep(build_M(simplex)), InvalidInput);
    for (std::size_t n = 2; n <= 5; ++n)
        for (const auto& tree : Tree::all_labelled(n)) CHECK(local_linear_independence(dvr::config_from_tree(3, tree, 0)));
}

TEST_CASE("decomposition multiplicities reproduce dimensions of random subrepresentations") {
    std::mt19937_64 rng(3);
    std::vector<dvr::LatticeConfiguration> cfgs{two_point(2), dvr::config_from_tree(3, Tree(4, {{0, 1}, {1, 2}, {1, 3}}), 0),
                                                dvr::config_from_exponents(2, {{2, 1, 0}, {1, 0, 0}, {0, 0, 0}})};
    for (const auto& cfg : cfgs) {
        TreeRep t(build_M(cfg));
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<std::pair<std::size_t, Vec>> seeds;
            std::size_t count = 1 + rng() % 3;
            for (std::size_t k = 0; k < count; ++k) seeds.push_back({rng() % cfg.size(), random_vector(rng, cfg.prime(), cfg.dim())});
            SubRep u = generated_subrep(t, seeds);
            REQUIRE(is_subrep(t.rep(), u));
            auto dec = decompose(t, u);
            CHECK(dims_from_decomposition(t.geom(), dec) == u.dims());
            auto gens = adapted_generators(t, u);
            std::size_t p_gens = 0;
            for (const auto& g : gens) p_gens += !g.edge.has_value();
            std::size_t p_mult = 0;
            for (int r : dec.vertex) p_mult += static_cast<std::size_t>(r);
            CHECK(p_gens == p_mult);
        }
    }
}

TEST_CASE("decompose rejects bad input") {
    auto cfg = two_point(3);
    TreeRep t(build_M(cfg));
    SubRep bad{{Subspace::span(3, 4, {{0, 1, 0, 0}}), Subspace(3, 4)}};
    CHECK_THROWS_AS(decompose(t, bad), NotASubrepresentation);
}

TEST_CASE("lifting recovers subrepresentations from partial data") {
    std::mt19937_64 rng(4);
    auto cfg = dvr::config_from_tree(3, Tree(4, {{0, 1}, {0, 2}, {0, 3}}), 0);
    TreeRep t(build_M(cfg));
    int done = 0;
    for (int trial = 0; trial < 200 && done < 40; ++trial) {
        std::vector<std::pair<std::size_t, Vec>> seeds{{rng() % 4, random_vector(rng, 3, 4)}, {rng() % 4, random_vector(rng, 3, 4)}};
        SubRep u = generated_subrep(t, seeds);
        auto dims = u.dims();
        if (std::set<std::size_t>(dims.begin(), dims.end()).size() != 1 || dims[0] == 0) continue;
        std::vector<std::optional<Subspace>> pres(4);
        std::size_t pick = rng() % 4;
        pres[pick] = u.spaces[pick];
        SubRep lifted = lift_to_subrep(t, dims[0], pres);
        CHECK(is_subrep(t.rep(), lifted));
        CHECK(lifted.spaces[pick] == u.spaces[pick]);
        ++done;
    }
    CHECK(done >= 20);
    std::vector<std::optional<Subspace>> none(4);
    CHECK_THROWS_AS(lift_to_subrep(t, 1, none), InvalidInput);
}

TEST_CASE("linked chain from the two-lattice data") {
    ChainData c{3, 4, {FieldMatrix::diagonal(3, {0, 1, 1, 1})}, {FieldMatrix::diagonal(3, {1, 0, 0, 0})}};
    auto eq = linked_chain_equivalence(c);
    CHECK(eq.config.size() == 2);
    CHECK(eq.config.adjacent(0, 1));
    CHECK(same_rank_profile(build_M(eq.config), eq.chain_rep, 4));
    // The lattices are the standard one and span{t^-1 e1, e2, e3, e4} up to a change of basis.
    auto prof = dvr::smith_pair(eq.config.lattice(0), eq.config.lattice(1));
    for (auto& a : prof.exponents) a -= prof.exponents.back();
    CHECK(prof.exponents == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("linked chain of length three") {
    ChainData c{2, 3, {FieldMatrix::diagonal(2, {0, 0, 1}), FieldMatrix::diagonal(2, {0, 1, 1})},
                {FieldMatrix::diagonal(2, {1, 1, 0}), FieldMatrix::diagonal(2, {1, 0, 0})}};
    auto eq = linked_chain_equivalence(c);
    CHECK(eq.config.size() == 3);
    CHECK(dvr::is_convex(eq.config));
    CHECK(quiver::WeightedQuiver::from_configuration(eq.config).double_tree().has_value());
}

TEST_CASE("linked chain error paths") {
    ChainData iso{3, 2, {FieldMatrix::identity(3, 2)}, {FieldMatrix(3, 2, 2)}};
    CHECK_THROWS_AS(linked_chain_equivalence(iso), InvalidInput);
    ChainData rank_gap{3, 2, {FieldMatrix::diagonal(3, {1, 0})}, {FieldMatrix(3, 2, 2)}};
    CHECK_THROWS_AS(linked_chain_equivalence(rank_gap), InvalidInput);
    ChainData not_zero{3, 2, {FieldMatrix::diagonal(3, {1, 0})}, {FieldMatrix::diagonal(3, {1, 0})}};
    CHECK_THROWS_AS(linked_chain_equivalence(not_zero), InvalidInput);
}
