#include "lq/tropical/twist.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include <boost/rational.hpp>

#include "lq/error.hpp"

namespace lq::tropical {

DualGraph::DualGraph(std::vector<std::vector<int>> multiplicity) : m_(std::move(multiplicity)) {
    const std::size_t n = m_.size();
    if (n == 0) throw InvalidInput("dual graph needs at least one vertex");
    for (std::size_t i = 0; i < n; ++i) {
        if (m_[i].size() != n) throw InvalidInput("edge multiplicity matrix must be square");
        if (m_[i][i] != 0) throw InvalidInput("dual graph may not have loops");
        for (std::size_t j = 0; j < n; ++j)
            if (m_[i][j] < 0 || m_[i][j] != m_[j][i]) throw InvalidInput("edge multiplicities must be symmetric and nonnegative");
    }
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v)
            if (m_[u][v] > 0 && !seen[v]) {
                seen[v] = true;
                stack.push_back(v);
            }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) throw InvalidInput("dual graph must be connected");
}

DualGraph DualGraph::complete(std::size_t n, int edges_per_pair) {
    std::vector<std::vector<int>> m(n, std::vector<int>(n, edges_per_pair));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 0;
    return DualGraph(std::move(m));
}

int DualGraph::degree(std::size_t v) const {
    int d = 0;
    for (int e : m_.at(v)) d += e;
    return d;
}

Multidegree twist(const DualGraph& g, const Multidegree& w, std::size_t v) {
    Multidegree out = w;
    for (std::size_t u = 0; u < g.size(); ++u) out[u] += g.edges(v, u);
    out[v] -= g.degree(v);
    return out;
}

Multidegree negative_twist(const DualGraph& g, const Multidegree& w, std::size_t v) {
    Multidegree out = w;
    for (std::size_t u = 0; u < g.size(); ++u) out[u] -= g.edges(v, u);
    out[v] += g.degree(v);
    return out;
}

Multidegree twist_by(const DualGraph& g, const Multidegree& w0, const TwistVector& x) {
    Multidegree out = w0;
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[v] -= g.degree(v) * x[v];
        for (std::size_t u = 0; u < g.size(); ++u) out[u] += g.edges(v, u) * x[v];
    }
    return out;
}

bool is_concentrated(const DualGraph& g, const Multidegree& w, std::size_t v) {
    const std::size_t n = g.size();
    if (n > 63) throw InvalidInput("concentration search supports at most 63 vertices");
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::unordered_set<std::uint64_t> dead;
    // Degrees after the negative twists at every vertex of `done`.
    std::function<bool(std::uint64_t, Multidegree&)> search = [&](std::uint64_t done, Multidegree& cur) {
        if (done == all) return true;
        if (dead.count(done)) return false;
        for (std::size_t u = 0; u < n; ++u) {
            if ((done >> u & 1) || cur[u] >= 0) continue;
            Multidegree next = negative_twist(g, cur, u);
            if (search(done | std::uint64_t{1} << u, next)) return true;
        }
        dead.insert(done);
        return false;
    };
    Multidegree start = negative_twist(g, w, v);
    return search(std::uint64_t{1} << v, start);
}

std::optional<TwistVector> twist_coordinates(const DualGraph& g, const Multidegree& w0, const Multidegree& w) {
    using Q = boost::rational<long long>;
    const std::size_t n = g.size();
    if (w0.size() != n || w.size() != n) throw InvalidInput("multidegree length does not match the dual graph");
    // Reduced Laplacian system with x_0 = 0: sum_v L_{u,v} x_v = w0_u - w_u for u >= 1.
    const std::size_t m = n - 1;
    std::vector<std::vector<Q>> a(m, std::vector<Q>(m + 1));
    for (std::size_t u = 1; u < n; ++u) {
        for (std::size_t v = 1; v < n; ++v) a[u - 1][v - 1] = u == v ? Q(g.degree(u)) : Q(-g.edges(u, v));
        a[u - 1][m] = Q(w0[u] - w[u]);
    }
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        while (a[piv][c].numerator() == 0) ++piv;  // reduced Laplacian of a connected graph is invertible
        std::swap(a[piv], a[c]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == c || a[r][c].numerator() == 0) continue;
            Q f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= m; ++k) a[r][k] -= f * a[c][k];
        }
    }
    TwistVector x(n, 0);
    for (std::size_t c = 0; c < m; ++c) {
        Q val = a[c][m] / a[c][c];
        if (val.denominator() != 1) return std::nullopt;
        x[c + 1] = static_cast<int>(val.numerator());
    }
    if (twist_by(g, w0, x) != w) return std::nullopt;
    return normalize_mod_ones(std::move(x));
}

TwistCoeffs coefficients_of(const DualGraph& g, const Multidegree& w0, const std::vector<Multidegree>& wv) {
    if (wv.size() != g.size()) throw InvalidInput("need one concentrated multidegree per vertex");
    TwistCoeffs c;
    for (const auto& w : wv) {
        auto x = twist_coordinates(g, w0, w);
        if (!x) throw InvalidInput("a concentrated multidegree is not reachable from w0 by twists");
        c.a.push_back(*x);
    }
    return c;
}

TwistCoeffs concentrate_further(const TwistCoeffs& coeffs, int k) {
    TwistCoeffs out = coeffs;
    for (std::size_t i = 0; i < out.size(); ++i) {
        // One negative twist at v_i equals one twist at every other vertex.
        for (std::size_t j = 0; j < out.size(); ++j)
            if (j != i) out.a[i][j] += k;
        out.a[i] = normalize_mod_ones(out.a[i]);
    }
    return out;
}

std::vector<TwistVector> twist_closure_coordinates(const TwistCoeffs& coeffs) {
    const auto& a = coeffs.a;
    const std::size_t n = a.size();
    if (n == 0) throw InvalidInput("twist coefficients are empty");
    std::vector<int> lo(n, 0), hi(n, 0);
    for (std::size_t j = 1; j < n; ++j) {
        lo[j] = a[j][j] - a[j][0];
        hi[j] = a[0][j] - a[0][0];
        if (lo[j] > hi[j]) throw InvalidInput("twist coefficients are inconsistent: the closure is empty");
    }
    std::vector<TwistVector> out;
    TwistVector x(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < n; ++k)
                    if (x[i] - x[k] < a[i][i] - a[i][k]) return;
            out.push_back(normalize_mod_ones(x));
            return;
        }
        for (int v = lo[j]; v <= hi[j]; ++v) {
            x[j] = v;
            rec(j + 1);
        }
    };
    rec(1);
    if (out.empty()) throw InvalidInput("twist coefficients are inconsistent: the closure is empty");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multidegree> twist_closure_vertices(const DualGraph& g, const Multidegree& w0, const TwistCoeffs& coeffs) {
    std::vector<Multidegree> out;
    for (const auto& x : twist_closure_coordinates(coeffs)) out.push_back(twist_by(g, w0, x));
    return out;
}

bool closure_condition(const TwistCoeffs& coeffs) {
    const auto& a = coeffs.a;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (a[k][i] - a[k][j] < a[i][i] - a[i][j]) return false;
    return true;
}

TwistVector normalize_mod_ones(TwistVector x) {
    if (x.empty()) return x;
    int m = *std::min_element(x.begin(), x.end());
    for (int& v : x) v -= m;
    return x;
}

std::vector<TwistVector> integral_tropical_hull(const std::vector<TwistVector>& points) {
    if (points.empty()) throw InvalidInput("tropical hull of an empty set");
    std::set<TwistVector> hull;
    for (const auto& p : points) {
        if (p.size() != points.front().size()) throw InvalidInput("points of different lengths");
        hull.insert(normalize_mod_ones(p));
    }
    std::vector<TwistVector> frontier(hull.begin(), hull.end());
    while (!frontier.empty()) {
        std::vector<TwistVector> fresh;
        const std::vector<TwistVector> current(hull.begin(), hull.end());
        for (const auto& p : frontier)
            for (const auto& q : current) {
                int lo = p[0] - q[0], hi = lo;
                for (std::size_t k = 0; k < p.size(); ++k) {
                    lo = std::min(lo, p[k] - q[k]);
                    hi = std::max(hi, p[k] - q[k]);
                }
                TwistVector y(p.size());
                for (int mu = lo; mu <= hi; ++mu) {
                    for (std::size_t k = 0; k < p.size(); ++k) y[k] = std::min(p[k], q[k] + mu);
                    TwistVector z = normalize_mod_ones(y);
                    if (hull.insert(z).second) fresh.push_back(z);
                }
            }
        frontier = std::move(fresh);
    }
    return {hull.begin(), hull.end()};
}

}  // namespace lq::tropical
