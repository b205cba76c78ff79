#include "lq/linalg/prime_field.hpp"

#include "lq/error.hpp"

namespace lq {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

std::uint32_t next_prime(std::uint32_t n) {
    std::uint32_t c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

Fp Zp::pow(Fp a, std::uint64_t e) const {
    Fp r = 1 % p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Fp Zp::inv(Fp a) const {
    if (a % p == 0) throw InvalidInput("division by zero in F_" + std::to_string(p));
    return pow(a, p - 2);
}

}  // namespace lq
