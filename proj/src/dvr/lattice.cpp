#include "lq/dvr/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "lq/error.hpp"

namespace lq::dvr {

Lattice::Lattice(KMatrix basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols()) throw InvalidInput("lattice basis must be square");
    if (basis_.rank() != basis_.rows()) throw InvalidInput("lattice basis is not invertible over K");
}

Lattice Lattice::standard(std::uint32_t p, std::size_t d) { return Lattice(KMatrix::identity(p, d)); }

Lattice Lattice::diagonal(std::uint32_t p, const std::vector<int>& exponents) {
    return Lattice(KMatrix::monomial_diagonal(p, exponents));
}

KMatrix Lattice::coordinates(const KMatrix& vectors) const { return basis_.inverse() * vectors; }

// Smith normal form over the valuation ring. Each step pivots on an entry of minimal
// valuation in the remaining block (first such entry in row-major order); every other
// entry of its row and column is then an R-multiple of it. Row operations on
// M = B2^{-1} B1 are mirrored as inverse column operations on U so that M = U D V
// throughout, and the adapted basis of L2 is B2 U.
PairProfile smith_pair(const Lattice& l1, const Lattice& l2) {
    if (l1.dim() != l2.dim()) throw InvalidInput("lattices live in different dimensions");
    const std::size_t d = l1.dim();
    const std::uint32_t p = l1.prime();
    KMatrix m = l2.coordinates(l1.basis());
    KMatrix u = KMatrix::identity(p, d);
    std::vector<int> diag(d);
    for (std::size_t k = 0; k < d; ++k) {
        std::size_t pi = k, pj = k;
        int best = Scalar::kInfinity;
        for (std::size_t i = k; i < d; ++i)
            for (std::size_t j = k; j < d; ++j)
                if (m(i, j).valuation() < best) {
                    best = m(i, j).valuation();
                    pi = i;
                    pj = j;
                }
        if (best == Scalar::kInfinity) throw InternalError("singular transition matrix in smith_pair");
        m.swap_rows(k, pi);
        u.swap_cols(k, pi);
        m.swap_cols(k, pj);
        // Make the pivot exactly t^best: row k times unit^{-1}, column k of U times unit.
        Scalar unit = m(k, k).shifted(-best);
        Scalar unit_inv = unit.inverse();
        for (std::size_t j = k; j < d; ++j) m(k, j) = m(k, j) * unit_inv;
        for (std::size_t i = 0; i < d; ++i) u(i, k) = u(i, k) * unit;
        const Scalar pivot_inv = Scalar::monomial(p, 1, -best);
        for (std::size_t i = k + 1; i < d; ++i) {
            if (m(i, k).is_zero()) continue;
            Scalar c = m(i, k) * pivot_inv;
            for (std::size_t j = k; j < d; ++j) m(i, j) = m(i, j) - c * m(k, j);
            for (std::size_t r = 0; r < d; ++r) u(r, k) = u(r, k) + c * u(r, i);
        }
        for (std::size_t j = k + 1; j < d; ++j) m(k, j) = Scalar(p);  // column operations, absorbed in V
        diag[k] = best;
    }
    // Pivot valuations come out non-decreasing; present them in decreasing order.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    PairProfile out;
    KMatrix adapted = l2.basis() * u;
    out.adapted_basis = adapted.column_block(order);
    for (auto k : order) out.exponents.push_back(diag[k]);
    return out;
}

int n_min(const Lattice& li, const Lattice& lj) {
    auto prof = smith_pair(li, lj);
    return -*std::min_element(prof.exponents.begin(), prof.exponents.end());
}

std::optional<int> homothety_shift(const Lattice& l1, const Lattice& l2) {
    auto prof = smith_pair(l1, l2);
    const auto& a = prof.exponents;
    if (std::all_of(a.begin(), a.end(), [&](int x) { return x == a.front(); })) return a.front();
    return std::nullopt;
}

bool adjacent(const Lattice& l1, const Lattice& l2) {
    auto prof = smith_pair(l1, l2);
    auto [lo, hi] = std::minmax_element(prof.exponents.begin(), prof.exponents.end());
    return *hi - *lo == 1;
}

Lattice intersect(const Lattice& l1, const Lattice& l2) {
    auto prof = smith_pair(l1, l2);
    std::vector<int> e;
    for (int a : prof.exponents) e.push_back(std::max(a, 0));
    return Lattice(prof.adapted_basis * KMatrix::monomial_diagonal(l1.prime(), e));
}

Lattice normalized(const Lattice& l) { return l.scaled(-l.basis().min_valuation()); }

std::vector<Lattice> convex_hull_pair(const Lattice& l1, const Lattice& l2) {
    auto prof = smith_pair(l1, l2);
    auto [lo, hi] = std::minmax_element(prof.exponents.begin(), prof.exponents.end());
    const int low = *lo, span = *hi - *lo;
    std::vector<Lattice> chain;
    for (int i = 0; i <= span; ++i) {
        std::vector<int> e;
        for (int a : prof.exponents) e.push_back(std::max(a - low - i, 0));
        chain.emplace_back(prof.adapted_basis * KMatrix::monomial_diagonal(l1.prime(), e));
    }
    return chain;
}

}  // namespace lq::dvr
