#pragma once

#include <climits>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lq/linalg/prime_field.hpp"

namespace lq::dvr {

using Poly = std::vector<Fp>;  // coefficients, lowest degree first, no trailing zeros

// An element of K = F_p(t), the fraction field of the valuation ring
// R = F_p[t] localised at (t), with uniformiser t.
//
// Stored canonically as t^v * num / den where num(0) != 0, den(0) = 1 and
// gcd(num, den) = 1. Laurent polynomials are the special case den = 1; they
// are what users type, but inverting a basis matrix leaves that subring.
class Scalar {
public:
    static constexpr int kInfinity = INT_MAX;

    Scalar() = default;  // zero over F_2
    explicit Scalar(std::uint32_t p) : p_(p) {}
    Scalar(std::uint32_t p, std::int64_t constant);

    static Scalar monomial(std::uint32_t p, std::int64_t coeff, int exponent);
    static Scalar laurent(std::uint32_t p, const std::map<int, std::int64_t>& terms);
    static Scalar fraction(std::uint32_t p, int shift, Poly num, Poly den);

    std::uint32_t prime() const { return p_; }
    bool is_zero() const { return num_.empty(); }
    int valuation() const { return is_zero() ? kInfinity : val_; }
    bool is_unit() const { return !is_zero() && val_ == 0; }
    bool in_ring() const { return valuation() >= 0; }
    // Image in the residue field F_p = R/tR. Requires valuation >= 0.
    Fp residue() const;

    bool is_laurent() const { return den_.size() == 1; }
    std::map<int, Fp> laurent_terms() const;  // requires is_laurent()

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    Scalar shifted(int k) const;  // times t^k

    bool operator==(const Scalar& o) const = default;

    std::string to_string() const;

private:
    void normalize();

    std::uint32_t p_ = 2;
    int val_ = 0;
    Poly num_;
    Poly den_{1};
};

namespace poly {
void trim(Poly& a);
Poly mul(const Poly& a, const Poly& b, const Zp& f);
Poly add(const Poly& a, const Poly& b, const Zp& f);
Poly scale(const Poly& a, Fp c, const Zp& f);
Poly shift(const Poly& a, std::size_t k);
void divmod(const Poly& a, const Poly& b, const Zp& f, Poly& q, Poly& r);
Poly gcd(Poly a, Poly b, const Zp& f);  // monic
}  // namespace poly

}  // namespace lq::dvr
