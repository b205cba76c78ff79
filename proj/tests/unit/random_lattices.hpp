#pragma once

#include <random>

#include "lq/dvr/lattice.hpp"

namespace lqtest {

using lq::dvr::KMatrix;
using lq::dvr::Lattice;
using lq::dvr::Scalar;

inline Scalar random_poly(std::mt19937_64& rng, std::uint32_t p, int max_degree) {
    std::map<int, std::int64_t> terms;
    std::uniform_int_distribution<std::int64_t> c(0, p - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    int top = deg(rng);
    for (int e = 0; e <= top; ++e) terms[e] = c(rng);
    return Scalar::laurent(p, terms);
}

// Random element of GL_d(R) built from elementary operations with polynomial entries
// and diagonal units of the form c + t*(...).
inline KMatrix random_unimodular(std::mt19937_64& rng, std::uint32_t p, std::size_t d, int steps = 6) {
    KMatrix g = KMatrix::identity(p, d);
    std::uniform_int_distribution<std::size_t> idx(0, d - 1);
    std::uniform_int_distribution<std::int64_t> unit(1, p - 1);
    for (int s = 0; s < steps; ++s) {
        KMatrix e = KMatrix::identity(p, d);
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) e(i, i) = Scalar(p, unit(rng)) + random_poly(rng, p, 2).shifted(1);
        else e(i, j) = random_poly(rng, p, 2);
        g = g * e;
    }
    return g;
}

inline std::vector<int> random_exponents(std::mt19937_64& rng, std::size_t d, int lo, int hi) {
    std::uniform_int_distribution<int> e(lo, hi);
    std::vector<int> out(d);
    for (auto& x : out) x = e(rng);
    return out;
}

// g * diag(t^e) with g unimodular: a lattice whose relative position to the standard one is e.
inline Lattice random_lattice(std::mt19937_64& rng, std::uint32_t p, std::size_t d, int lo = -2, int hi = 2) {
    return Lattice(random_unimodular(rng, p, d) * KMatrix::monomial_diagonal(p, random_exponents(rng, d, lo, hi)));
}

// Determinant by Laplace expansion; independent of any elimination code.
inline Scalar det(const KMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return Scalar(m.prime(), 1);
    if (n == 1) return m(0, 0);
    Scalar acc(m.prime());
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        KMatrix minor(m.prime(), n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Scalar term = m(0, j) * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace lqtest
