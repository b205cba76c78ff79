#include "lq/dvr/scalar.hpp"

#include <sstream>

#include "lq/error.hpp"

namespace lq::dvr {

namespace poly {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly mul(const Poly& a, const Poly& b, const Zp& f) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

Poly add(const Poly& a, const Poly& b, const Zp& f) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.add(r[i], b[i]);
    trim(r);
    return r;
}

Poly scale(const Poly& a, Fp c, const Zp& f) {
    Poly r(a);
    for (auto& x : r) x = f.mul(x, c);
    trim(r);
    return r;
}

Poly shift(const Poly& a, std::size_t k) {
    if (a.empty()) return {};
    Poly r(k, 0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

void divmod(const Poly& a, const Poly& b, const Zp& f, Poly& q, Poly& r) {
    if (b.empty()) throw InvalidInput("polynomial division by zero");
    r = a;
    q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    Fp lead_inv = f.inv(b.back());
    while (!r.empty() && r.size() >= b.size()) {
        std::size_t k = r.size() - b.size();
        Fp c = f.mul(r.back(), lead_inv);
        q[k] = c;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] = f.sub(r[k + i], f.mul(c, b[i]));
        trim(r);
    }
    trim(q);
}

Poly gcd(Poly a, Poly b, const Zp& f) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly q, r;
        divmod(a, b, f, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = scale(a, f.inv(a.back()), f);
    return a;
}

}  // namespace poly

Scalar::Scalar(std::uint32_t p, std::int64_t constant) : p_(p) {
    Fp c = Zp{p}.reduce(constant);
    if (c) num_ = {c};
}

Scalar Scalar::monomial(std::uint32_t p, std::int64_t coeff, int exponent) {
    Scalar s(p, coeff);
    if (!s.is_zero()) s.val_ = exponent;
    return s;
}

Scalar Scalar::laurent(std::uint32_t p, const std::map<int, std::int64_t>& terms) {
    Scalar s(p);
    Zp f{p};
    if (terms.empty()) return s;
    int lo = terms.begin()->first;
    int hi = terms.rbegin()->first;
    Poly num(static_cast<std::size_t>(hi - lo) + 1, 0);
    for (auto [e, c] : terms) num[static_cast<std::size_t>(e - lo)] = f.add(num[static_cast<std::size_t>(e - lo)], f.reduce(c));
    return fraction(p, lo, std::move(num), Poly{1});
}

Scalar Scalar::fraction(std::uint32_t p, int shift, Poly num, Poly den) {
    Scalar s(p);
    poly::trim(num);
    poly::trim(den);
    if (den.empty()) throw InvalidInput("zero denominator");
    s.val_ = shift;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    Zp f{p_};
    poly::trim(num_);
    if (num_.empty()) {
        val_ = 0;
        den_ = {1};
        return;
    }
    std::size_t k = 0;
    while (num_[k] == 0) ++k;
    if (k) {
        num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(k));
        val_ += static_cast<int>(k);
    }
    k = 0;
    while (den_[k] == 0) ++k;
    if (k) {
        den_.erase(den_.begin(), den_.begin() + static_cast<std::ptrdiff_t>(k));
        val_ -= static_cast<int>(k);
    }
    if (den_.size() > 1 && num_.size() > 1) {
        Poly g = poly::gcd(num_, den_, f);
        if (g.size() > 1) {
            Poly q, r;
            poly::divmod(num_, g, f, q, r);
            num_ = q;
            poly::divmod(den_, g, f, q, r);
            den_ = q;
        }
    }
    Fp c = f.inv(den_[0]);
    if (c != 1) {
        num_ = poly::scale(num_, c, f);
        den_ = poly::scale(den_, c, f);
    }
}

Fp Scalar::residue() const {
    if (is_zero() || val_ > 0) return 0;
    if (val_ < 0) throw InvalidInput("residue of an element outside the valuation ring");
    return num_[0];
}

std::map<int, Fp> Scalar::laurent_terms() const {
    if (!is_laurent()) throw InvalidInput("element is not a Laurent polynomial");
    std::map<int, Fp> out;
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i]) out[val_ + static_cast<int>(i)] = num_[i];
    return out;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (o.p_ != p_ && !is_zero() && !o.is_zero()) throw InvalidInput("mixing scalars over different primes");
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    Zp f{p_};
    int v = std::min(val_, o.val_);
    Poly a = poly::shift(poly::mul(num_, o.den_, f), static_cast<std::size_t>(val_ - v));
    Poly b = poly::shift(poly::mul(o.num_, den_, f), static_cast<std::size_t>(o.val_ - v));
    Scalar r(p_);
    r.val_ = v;
    r.num_ = poly::add(a, b, f);
    r.den_ = den_.size() == 1 && o.den_.size() == 1 ? Poly{1} : poly::mul(den_, o.den_, f);
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    Zp f{p_};
    for (auto& c : r.num_) c = f.neg(c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return Scalar(is_zero() ? p_ : o.p_);
    if (o.p_ != p_) throw InvalidInput("mixing scalars over different primes");
    Zp f{p_};
    Scalar r(p_);
    r.val_ = val_ + o.val_;
    r.num_ = poly::mul(num_, o.num_, f);
    r.den_ = poly::mul(den_, o.den_, f);
    if (num_.size() > 1 || o.num_.size() > 1 || den_.size() > 1 || o.den_.size() > 1) r.normalize();
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of zero in F_p(t)");
    return fraction(p_, -val_, den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::shifted(int k) const {
    Scalar r(*this);
    if (!r.is_zero()) r.val_ += k;
    return r;
}

namespace {
std::string poly_string(const Poly& a, int offset, const Zp& f) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        std::int64_t c = f.centered(a[i]);
        int e = offset + static_cast<int>(i);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        std::int64_t m = c < 0 ? -c : c;
        if (e == 0) os << m;
        else {
            if (m != 1) os << m << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return first ? "0" : os.str();
}
}  // namespace

std::string Scalar::to_string() const {
    Zp f{p_};
    if (is_zero()) return "0";
    if (is_laurent()) return poly_string(num_, val_, f);
    return "(" + poly_string(num_, val_, f) + ")/(" + poly_string(den_, 0, f) + ")";
}

}  // namespace lq::dvr
