#include <random>

#include "doctest.h"
#include "lq/quiver/quiver.hpp"
#include "random_lattices.hpp"

using namespace lq;
using namespace lq::quiver;

TEST_CASE("quiver of the two-lattice example is a doubled edge") {
    auto cfg = dvr::config_from_exponents(3, {{0, 0, 0, 0}, {-1, 0, 0, 0}});
    auto q = WeightedQuiver::from_configuration(cfg);
    CHECK(q.arrows() == std::vector<Arrow>{{0, 1}, {1, 0}});
    auto t = q.double_tree();
    REQUIRE(t.has_value());
    CHECK(t->size() == 2);
    CHECK(q.algebra_dim() == 4);
    CHECK(q.path_is_zero({0, 1, 0}));
    CHECK_FALSE(q.path_is_zero({0, 1}));
}

TEST_CASE("chain of three classes only has arrows between neighbours") {
    auto cfg = dvr::config_from_exponents(2, {{2, 1, 0}, {1, 0, 0}, {0, 0, 0}});
    auto q = WeightedQuiver::from_configuration(cfg);
    CHECK(q.arrows() == std::vector<Arrow>{{0, 1}, {1, 0}, {1, 2}, {2, 1}});
    CHECK(q.path_weight({0, 1, 2}) == q.n(0, 2));
    CHECK_FALSE(q.path_is_zero({0, 1, 2}));
    CHECK(q.path_is_zero({0, 1, 0}));
    auto t = q.double_tree();
    REQUIRE(t.has_value());
    CHECK(t->adjacent(0, 1));
    CHECK(t->adjacent(1, 2));
    CHECK_FALSE(t->adjacent(0, 2));
}

TEST_CASE("a 2-simplex gives an oriented triangle, not a double tree") {
    auto cfg = dvr::config_from_exponents(2, {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}});
    auto q = WeightedQuiver::from_configuration(cfg);
    CHECK(q.arrows() == std::vector<Arrow>{{0, 2}, {1, 0}, {2, 1}});
    CHECK_FALSE(q.double_tree().has_value());
}

TEST_CASE("tree configurations have their tree as double quiver") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto& tree : Tree::all_labelled(n)) {
            auto cfg = dvr::config_from_tree(2, tree, 0);
            auto t = WeightedQuiver::from_configuration(cfg).double_tree();
            REQUIRE(t.has_value());
            CHECK(t->edges() == tree.edges());
        }
}

TEST_CASE("path algebra product matches the lattice-theoretic criterion") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<dvr::Lattice> ls;
        for (int k = 0; k < 3; ++k) ls.push_back(lqtest::random_lattice(rng, 2, 3, -1, 1));
        auto cfg = dvr::convex_closure(dvr::LatticeConfiguration(ls));
        if (cfg.size() > 12) continue;
        auto q = WeightedQuiver::from_configuration(cfg);
        for (std::size_t i = 0; i < cfg.size(); ++i)
            for (std::size_t ip = 0; ip < cfg.size(); ++ip)
                for (std::size_t j = 0; j < cfg.size(); ++j) {
                    bool algebraic_zero = !compose(q, {i, ip}, {ip, j}).has_value();
                    CHECK(algebraic_zero == geometric_product_vanishes(cfg, i, ip, j));
                    ++checked;
                }
    }
    CHECK(checked > 100);
}

TEST_CASE("composition is associative") {
    auto cfg = dvr::convex_closure(dvr::config_from_exponents(3, {{0, 0, 0}, {2, 1, 0}, {0, 2, 1}}));
    auto q = WeightedQuiver::from_configuration(cfg);
    const std::size_t m = q.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    auto left = compose(q, {a, b}, {b, c});
                    auto lhs = left ? compose(q, *left, {c, d}) : std::nullopt;
                    auto right = compose(q, {b, c}, {c, d});
                    auto rhs = right ? compose(q, {a, b}, *right) : std::nullopt;
                    CHECK(lhs == rhs);
                }
}
