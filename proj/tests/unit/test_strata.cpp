#include <random>
#include <set>

#include "doctest.h"
#include "lq/error.hpp"
#include "lq/strata/brute_force.hpp"
#include "lq/strata/pluecker.hpp"

using namespace lq;
using namespace lq::strata;

namespace {

TreeRep tree_rep(const dvr::LatticeConfiguration& cfg) { return TreeRep(rep::build_M(cfg)); }

std::size_t gaussian_binomial(std::size_t n, std::size_t k, std::size_t q) {
    // Count r-subspaces by counting ordered bases: prod (q^n - q^i) / (q^k - q^i).
    std::size_t num = 1, den = 1, qn = 1, qk = 1;
    for (std::size_t i = 0; i < n; ++i) qn *= q;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    std::size_t qi = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= qn - qi;
        den *= qk - qi;
        qi *= q;
    }
    return num / den;
}

std::set<StrataTuple> keys(const std::map<StrataTuple, std::size_t>& m) {
    std::set<StrataTuple> out;
    for (const auto& [k, _] : m) out.insert(k);
    return out;
}

}  // namespace

TEST_CASE("grassmannian sizes are Gaussian binomials") {
    for (std::size_t q : {2u, 3u})
        for (std::size_t n = 1; n <= 4; ++n)
            for (std::size_t k = 0; k <= n; ++k) {
                auto g = grassmannian(static_cast<std::uint32_t>(q), n, k);
                CHECK(g.size() == gaussian_binomial(n, k, q));
                CHECK(std::set<Subspace>(g.begin(), g.end()).size() == g.size());
            }
}

TEST_CASE("two-lattice example at rank two") {
    for (std::uint32_t q : {2u, 3u}) {
        auto m = tree_rep(dvr::config_from_exponents(q, {{0, 0, 0, 0}, {-1, 0, 0, 0}}));
        auto d = ambient_multiplicities(m);
        CHECK(d == std::vector<int>{3, 1});
        auto strata_list = enumerate_strata(m.geom(), d, 2);
        CHECK(strata_list == std::vector<StrataTuple>{{1, 0}, {1, 1}, {2, 0}});
        // Exhaustive oracle over F_q.
        auto seen = brute_force_strata(m, 2);
        CHECK(keys(seen) == std::set<StrataTuple>(strata_list.begin(), strata_list.end()));
        CHECK(components(m.geom(), d, 2) == std::vector<std::vector<int>>{{1, 1}, {2, 0}});
        CHECK(component_image(m.geom(), {2, 0}) == StrataTuple{2, 0});
        CHECK(component_image(m.geom(), {1, 1}) == StrataTuple{1, 1});
        CHECK(maximal_elements(strata_list) == std::vector<StrataTuple>{{1, 1}, {2, 0}});
    }
}

TEST_CASE("stratum of R_e plus R_ebar in the smallest two-point case is a point") {
    auto m = tree_rep(dvr::config_from_exponents(2, {{0, 0}, {-1, 0}}));
    auto d = ambient_multiplicities(m);
    CHECK(d == std::vector<int>{1, 1});
    auto dec = decomposition_of(m.geom(), 1, {0, 0});
    CHECK(dec.vertex == std::vector<int>{0, 0});
    CHECK(dec.edge == std::vector<int>{1, 1});
    CHECK(stratum_dim(m.geom(), d, dec) == 0);
    CHECK(brute_force_strata(m, 1).at({0, 0}) == 1);
}

TEST_CASE("Hom table agrees with explicit Hom computations on realised points") {
    std::mt19937_64 rng(8);
    std::vector<dvr::LatticeConfiguration> cfgs{
        dvr::config_from_exponents(5, {{0, 0, 0, 0}, {-1, 0, 0, 0}}),
        dvr::config_from_tree(5, Tree(3, {{0, 1}, {1, 2}}), 0),
        dvr::config_from_tree(5, Tree(4, {{0, 1}, {0, 2}, {0, 3}}), 0),
        dvr::config_from_exponents(5, {{2, 1, 0}, {1, 0, 0}, {0, 0, 0}}),
    };
    int checked = 0;
    for (const auto& cfg : cfgs) {
        auto m = tree_rep(cfg);
        auto d = ambient_multiplicities(m);
        for (int r = 1; r <= 2; ++r)
            for (const auto& t : enumerate_strata(m.geom(), d, r)) {
                SubRep u = realize_stratum(m, r, t, rng);
                auto dec = rep::decompose(m, u);
                CHECK(dec == decomposition_of(m.geom(), r, t));
                auto ur = rep::restrict(m.rep(), u);
                int explicit_dim = static_cast<int>(rep::hom_dim(ur, m.rep())) - static_cast<int>(rep::hom_dim(ur, ur));
                CHECK(explicit_dim == stratum_dim(m.geom(), d, dec));
                ++checked;
            }
    }
    CHECK(checked > 10);
}

TEST_CASE("components are pure of dimension r(d - r)") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (const auto& tree : Tree::all_labelled(n)) {
            auto m = tree_rep(dvr::config_from_tree(2, tree, 0));
            auto d = ambient_multiplicities(m);
            int total = 0;
            for (int x : d) total += x;
            for (int r = 1; r <= total; ++r)
                for (const auto& rv : components(m.geom(), d, r)) {
                    rep::Decomposition dec{rv, std::vector<int>(m.geom().edges().size(), 0)};
                    CHECK(stratum_dim(m.geom(), d, dec) == r * (total - r));
                    CHECK(admissible(m.geom(), d, r, component_image(m.geom(), rv)));
                }
        }
}

TEST_CASE("specialisation merges an R pair into a projective summand") {
    std::mt19937_64 rng(12);
    auto m = tree_rep(dvr::config_from_exponents(3, {{0, 0, 0, 0}, {-1, 0, 0, 0}}));
    SubRep u = realize_stratum(m, 2, {1, 0}, rng);
    auto dec = rep::decompose(m, u);
    CHECK(dec.edge == std::vector<int>{1, 1});
    SubRep n0 = specialize(m, u, 0, rng);
    CHECK(phi(m, n0) == StrataTuple{2, 0});
    SubRep n1 = specialize(m, u, 1, rng);
    CHECK(phi(m, n1) == StrataTuple{1, 1});
    CHECK(rep::is_projective(m, n1));
    SubRep proj = realize_stratum(m, 2, {2, 0}, rng);
    CHECK_THROWS_AS(specialize(m, proj, 0, rng), InvalidInput);
}

TEST_CASE("realisation of the full rank stratum is the ambient representation") {
    std::mt19937_64 rng(1);
    auto m = tree_rep(dvr::config_from_tree(3, Tree(3, {{0, 1}, {0, 2}}), 0));
    auto d = ambient_multiplicities(m);
    auto strata_list = enumerate_strata(m.geom(), d, 3);
    REQUIRE(strata_list.size() == 1);
    SubRep u = realize_stratum(m, 3, strata_list.front(), rng);
    for (const auto& s : u.spaces) CHECK(s.dim() == 3);
    CHECK_THROWS_AS(realize_stratum(m, 1, StrataTuple(4, 1), rng), InvalidInput);
}

TEST_CASE("brute force respects the budget") {
    auto m = tree_rep(dvr::config_from_tree(3, Tree(4, {{0, 1}, {1, 2}, {2, 3}}), 0));
    CHECK_THROWS_AS(brute_force_points(m.rep(), 2, 100), BudgetExceeded);
}

TEST_CASE("Plücker coordinates and their inverse") {
    Subspace x1 = Subspace::span(3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(pluecker_coordinates(x1) == Vec{1, 0, 0, 0, 0, 0});
    Subspace plus = Subspace::span(3, 4, {{0, 1, 0, 1}, {0, 0, 1, 0}});
    CHECK(pluecker_coordinates(plus) == Vec{0, 0, 0, 1, 0, 2});  // p_34 = -1
    Subspace minus = from_pluecker(3, 4, 2, {0, 0, 0, 1, 0, 1});
    CHECK(minus == Subspace::span(3, 4, {{0, 1, 0, 2}, {0, 0, 1, 0}}));
    std::mt19937_64 rng(3);
    for (const auto& s : grassmannian(3, 4, 2)) CHECK(from_pluecker(3, 4, 2, pluecker_coordinates(s)) == s);
}

TEST_CASE("equational test misses the linked condition in the two-lattice example") {
    auto cfg = dvr::config_from_exponents(3, {{0, 0, 0, 0}, {-1, 0, 0, 0}});
    auto x1 = from_pluecker(3, 4, 2, {1, 0, 0, 0, 0, 0});
    auto x2 = from_pluecker(3, 4, 2, {0, 0, 0, 1, 0, 1});
    auto check = pluecker_check(cfg, 1, {{x1, x2}});
    CHECK(check.compounds[0] == dvr::KMatrix::monomial_diagonal(3, {1, 1, 1, 0, 0, 0}));
    CHECK(check.compounds[1] == dvr::KMatrix::identity(3, 6));
    CHECK(check.minors_vanish);
    CHECK_FALSE(check.linked);
    CHECK(check.discrepancy());
}
