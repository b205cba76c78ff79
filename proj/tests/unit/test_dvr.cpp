#include <algorithm>
#include <random>

#include "doctest.h"
#include "lq/dvr/configuration.hpp"
#include "lq/error.hpp"
#include "random_lattices.hpp"

using namespace lq;
using namespace lq::dvr;
using lqtest::det;

namespace {


// k x k minors of m, minimal valuation among them.
int min_minor_valuation(const KMatrix& m, std::size_t k) {
    std::size_t d = m.rows();
    int best = Scalar::kInfinity;
    std::vector<bool> rs(d, false), cs(d, false);
    std::fill(rs.begin(), rs.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
        std::fill(cs.begin(), cs.end(), false);
        std::fill(cs.begin(), cs.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::vector<std::size_t> ri, ci;
            for (std::size_t i = 0; i < d; ++i) {
                if (rs[i]) ri.push_back(i);
                if (cs[i]) ci.push_back(i);
            }
            KMatrix sub(m.prime(), k, k);
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
            best = std::min(best, det(sub).valuation());
        } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    return best;
}

}  // namespace

TEST_CASE("scalar arithmetic obeys field identities") {
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        for (int trial = 0; trial < 200; ++trial) {
            Scalar a = lqtest::random_poly(rng, p, 3).shifted(static_cast<int>(rng() % 5) - 2);
            Scalar b = lqtest::random_poly(rng, p, 3) + Scalar(p, 1).shifted(4);
            Scalar c = lqtest::random_poly(rng, p, 2);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - a == Scalar(p));
            if (!b.is_zero()) {
                CHECK((a / b) * b == a);
                CHECK(b * b.inverse() == Scalar(p, 1));
            }
            if (!a.is_zero() && !b.is_zero()) CHECK((a * b).valuation() == a.valuation() + b.valuation());
            if (!(a + b).is_zero()) CHECK((a + b).valuation() >= std::min(a.valuation(), b.valuation()));
        }
    }
    CHECK(Scalar(5).valuation() == Scalar::kInfinity);
}

TEST_CASE("units of the valuation ring have residues") {
    Scalar u = Scalar::laurent(5, {{0, 3}, {1, 1}});  // 3 + t
    CHECK(u.is_unit());
    CHECK(u.inverse().residue() == Zp{5}.inv(3));
    CHECK_FALSE(u.inverse().is_laurent());
    CHECK_THROWS_AS(Scalar::monomial(5, 1, -1).residue(), InvalidInput);
}

TEST_CASE("smith_pair agrees with determinantal divisors and reconstructs both lattices") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t p = trial % 2 ? 3 : 2;
        std::size_t d = 1 + trial % 4;
        Lattice l1 = lqtest::random_lattice(rng, p, d);
        Lattice l2 = lqtest::random_lattice(rng, p, d);
        PairProfile prof = smith_pair(l1, l2);
        REQUIRE(prof.exponents.size() == d);
        CHECK(std::is_sorted(prof.exponents.rbegin(), prof.exponents.rend()));
        // The sum of the k smallest exponents is the minimal valuation of k x k minors.
        KMatrix m = l2.coordinates(l1.basis());
        std::vector<int> asc(prof.exponents.rbegin(), prof.exponents.rend());
        int partial = 0;
        for (std::size_t k = 1; k <= d; ++k) {
            partial += asc[k - 1];
            CHECK(min_minor_valuation(m, k) == partial);
        }
        Lattice e(prof.adapted_basis);
        CHECK(e.equals(l2));
        CHECK(Lattice(prof.adapted_basis * KMatrix::monomial_diagonal(p, prof.exponents)).equals(l1));
    }
}

TEST_CASE("n_min is the least n with t^n L1 inside L2") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Lattice l1 = lqtest::random_lattice(rng, 3, 3);
        Lattice l2 = lqtest::random_lattice(rng, 3, 3);
        int n = n_min(l1, l2);
        CHECK(l2.contains(l1.scaled(n)));
        CHECK_FALSE(l2.contains(l1.scaled(n - 1)));
        CHECK(n == -l2.coordinates(l1.basis()).min_valuation());
    }
}

TEST_CASE("two-lattice example in dimension four") {
    Lattice l1 = Lattice::standard(3, 4);
    Lattice l2 = Lattice::diagonal(3, {-1, 0, 0, 0});
    auto prof = smith_pair(l1, l2);
    CHECK(prof.exponents == std::vector<int>{1, 0, 0, 0});
    CHECK(n_min(l1, l2) == 0);
    CHECK(n_min(l2, l1) == 1);
    CHECK(adjacent(l1, l2));
    LatticeConfiguration cfg({l1, l2});
    CHECK(cfg.induced_map(0, 1) == FieldMatrix::diagonal(3, {0, 1, 1, 1}));
    CHECK(cfg.induced_map(1, 0) == FieldMatrix::diagonal(3, {1, 0, 0, 0}));
}

TEST_CASE("homothety shift and merge map") {
    Lattice l = Lattice::diagonal(2, {0, 1, 3});
    CHECK(homothety_shift(l.scaled(2), l) == 2);
    CHECK_FALSE(homothety_shift(Lattice::diagonal(2, {0, 1, 2}), l).has_value());
    LatticeConfiguration cfg({l, Lattice::standard(2, 3), l.scaled(-4)});
    CHECK(cfg.size() == 2);
    CHECK(cfg.input_to_class() == std::vector<std::size_t>{0, 1, 0});
    // Dimension one: every lattice is homothetic to every other.
    LatticeConfiguration line({Lattice::diagonal(2, {3}), Lattice::diagonal(2, {-1})});
    CHECK(line.size() == 1);
}

TEST_CASE("intersection commutes with change of basis") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t d = 2 + trial % 3;
        auto a = lqtest::random_exponents(rng, d, -2, 2);
        auto b = lqtest::random_exponents(rng, d, -2, 2);
        std::vector<int> m(d);
        for (std::size_t i = 0; i < d; ++i) m[i] = std::max(a[i], b[i]);
        KMatrix g = lqtest::random_unimodular(rng, 2, d) * KMatrix::monomial_diagonal(2, lqtest::random_exponents(rng, d, -1, 1));
        Lattice la(g * KMatrix::monomial_diagonal(2, a));
        Lattice lb(g * KMatrix::monomial_diagonal(2, b));
        Lattice expect(g * KMatrix::monomial_diagonal(2, m));
        CHECK(intersect(la, lb).equals(expect));
    }
}

TEST_CASE("convex hull of a pair is a chain of adjacent classes") {
    Lattice l0 = Lattice::diagonal(5, {2, 1, 0});
    Lattice l2 = Lattice::standard(5, 3);
    auto chain = convex_hull_pair(l0, l2);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].equals(Lattice::diagonal(5, {2, 1, 0})));
    CHECK(chain[1].equals(Lattice::diagonal(5, {1, 0, 0})));
    CHECK(chain[2].equals(Lattice::diagonal(5, {0, 0, 0})));

    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        Lattice a = lqtest::random_lattice(rng, 2, 3, -3, 3);
        Lattice b = lqtest::random_lattice(rng, 2, 3, -3, 3);
        auto ch = convex_hull_pair(a, b);
        CHECK(homothety_shift(ch.front(), a).has_value());
        CHECK(ch.back().equals(b));
        for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
            CHECK(ch[i + 1].contains(ch[i]));
            CHECK(ch[i].scaled(-1).contains(ch[i + 1]));
            CHECK(adjacent(ch[i], ch[i + 1]));
        }
    }
}

TEST_CASE("convexity and closure") {
    // {[2,1,0], [0,0,0]} misses the middle class.
    auto cfg = config_from_exponents(3, {{2, 1, 0}, {0, 0, 0}});
    CHECK_FALSE(is_convex(cfg));
    auto closed = convex_closure(cfg);
    CHECK(closed.size() == 3);
    CHECK(is_convex(closed));
    CHECK(closed.find_class(Lattice::diagonal(3, {1, 0, 0})).has_value());
    CHECK(closed.find_class(cfg.lattice(0)) == 0);
    // Closure is idempotent.
    CHECK(convex_closure(closed).size() == closed.size());
}

TEST_CASE("tree exponents follow the shared-edge count") {
    // Star with centre 0 and leaves 1, 2, 3, rooted at the centre.
    Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto a = tree_exponents(star, 0);
    CHECK(a[0] == std::vector<int>{0, 0, 0, 0});
    CHECK(a[1] == std::vector<int>{1, 0, 1, 1});
    CHECK(a[2] == std::vector<int>{1, 1, 0, 1});
    CHECK(a[3] == std::vector<int>{1, 1, 1, 0});
    // Up to homothety, leaf u is span{t^{-1} e_u, e_v (v != u)}.
    auto cfg = config_from_tree(2, star, 0);
    CHECK(cfg.size() == 4);
    CHECK(homothety_shift(cfg.lattice(1), Lattice::diagonal(2, {0, -1, 0, 0})).has_value());
    CHECK(is_convex(cfg));
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) CHECK(cfg.adjacent(static_cast<std::size_t>(u), static_cast<std::size_t>(v)) == star.adjacent(u, v));
}

TEST_CASE("configuration rejects bad input") {
    CHECK_THROWS_AS(LatticeConfiguration(std::vector<Lattice>{}), InvalidInput);
    KMatrix singular(3, 2, 2);
    CHECK_THROWS_AS(Lattice{singular}, InvalidInput);
    CHECK_THROWS_AS(config_from_exponents(3, {{0, 1}, {0}}), InvalidInput);
}
