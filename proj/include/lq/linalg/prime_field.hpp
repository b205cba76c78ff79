#pragma once

#include <cstdint>

namespace lq {

using Fp = std::uint32_t;

bool is_prime(std::uint64_t n);
std::uint32_t next_prime(std::uint32_t n);  // smallest prime strictly greater than n

// Arithmetic in Z/pZ. Elements are kept in [0, p).
struct Zp {
    std::uint32_t p = 2;

    Fp reduce(std::int64_t v) const {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        return static_cast<Fp>(m < 0 ? m + p : m);
    }
    Fp add(Fp a, Fp b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Fp>(s >= p ? s - p : s);
    }
    Fp sub(Fp a, Fp b) const { return a >= b ? a - b : static_cast<Fp>(std::uint64_t{a} + p - b); }
    Fp neg(Fp a) const { return a == 0 ? 0 : p - a; }
    Fp mul(Fp a, Fp b) const { return static_cast<Fp>((std::uint64_t{a} * b) % p); }
    Fp pow(Fp a, std::uint64_t e) const;
    Fp inv(Fp a) const;  // throws InvalidInput on zero
    // Centered representative in (-p/2, p/2], handy for printing.
    std::int64_t centered(Fp a) const { return a > p / 2 ? std::int64_t{a} - p : std::int64_t{a}; }
};

}  // namespace lq
