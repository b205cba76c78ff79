#include "lq/strata/pluecker.hpp"

#include <algorithm>

#include "lq/error.hpp"

namespace lq::strata {

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    if (r > d) return out;
    std::vector<bool> pick(d, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t j = 0; j < d; ++j)
            if (pick[j]) s.push_back(j);
        out.push_back(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

Vec pluecker_coordinates(const Subspace& s) {
    const std::size_t r = s.dim(), d = s.ambient();
    Vec out;
    for (const auto& cols : subsets(d, r)) {
        FieldMatrix sub(s.prime(), r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sub(i, j) = s.basis()(i, cols[j]);
        // Determinant via elimination: product of pivots with the permutation sign.
        Zp f{s.prime()};
        Fp det = 1 % s.prime();
        for (std::size_t c = 0; c < r && det; ++c) {
            std::size_t piv = c;
            while (piv < r && sub(piv, c) == 0) ++piv;
            if (piv == r) {
                det = 0;
                break;
            }
            if (piv != c) {
                for (std::size_t j = 0; j < r; ++j) std::swap(sub(piv, j), sub(c, j));
                det = f.neg(det);
            }
            det = f.mul(det, sub(c, c));
            Fp inv = f.inv(sub(c, c));
            for (std::size_t i = c + 1; i < r; ++i) {
                Fp m = f.mul(sub(i, c), inv);
                for (std::size_t j = c; j < r; ++j) sub(i, j) = f.sub(sub(i, j), f.mul(m, sub(c, j)));
            }
        }
        out.push_back(det);
    }
    return out;
}

Subspace from_pluecker(std::uint32_t p, std::size_t d, std::size_t r, const Vec& coords) {
    auto idx = subsets(d, r);
    if (coords.size() != idx.size()) throw InvalidInput("Plücker vector has the wrong length");
    Zp f{p};
    std::size_t lead = 0;
    while (lead < coords.size() && coords[lead] == 0) ++lead;
    if (lead == coords.size()) throw InvalidInput("zero Plücker vector");
    // With I the first nonzero index, row i of the basis has x_j = p_{I - I_i + j} / p_I.
    const auto& base = idx[lead];
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < r; ++i) {
        Vec row(d, 0);
        for (std::size_t j = 0; j < d; ++j) {
            std::vector<std::size_t> s = base;
            s[i] = j;
            std::vector<std::size_t> sorted = s;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            // Sign of the permutation sorting s.
            int inversions = 0;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = a + 1; b < r; ++b) inversions += s[a] > s[b];
            std::size_t k = static_cast<std::size_t>(std::find(idx.begin(), idx.end(), sorted) - idx.begin());
            Fp v = f.mul(coords[k], f.inv(coords[lead]));
            row[j] = inversions % 2 ? f.neg(v) : v;
        }
        rows.push_back(row);
    }
    Subspace out = Subspace::span(p, d, rows);
    if (out.dim() != r) throw InvalidInput("Plücker vector is not decomposable");
    Vec check = pluecker_coordinates(out);
    Fp scale = f.mul(coords[lead], f.inv(check[lead]));
    for (std::size_t k = 0; k < check.size(); ++k)
        if (f.mul(check[k], scale) != coords[k]) throw InvalidInput("Plücker vector is not decomposable");
    return out;
}

namespace {
dvr::Scalar k_det(dvr::KMatrix a) {
    const std::size_t n = a.rows();
    dvr::Scalar det(a.prime(), 1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c).is_zero()) ++piv;
        if (piv == n) return dvr::Scalar(a.prime());
        if (piv != c) {
            a.swap_rows(piv, c);
            det = -det;
        }
        det = det * a(c, c);
        dvr::Scalar inv = a(c, c).inverse();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c).is_zero()) continue;
            dvr::Scalar m = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) - m * a(c, j);
        }
    }
    return det;
}
}  // namespace

dvr::KMatrix compound(const dvr::KMatrix& m, std::size_t r) {
    auto rs = subsets(m.rows(), r), cs = subsets(m.cols(), r);
    dvr::KMatrix out(m.prime(), rs.size(), cs.size());
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < cs.size(); ++b) {
            dvr::KMatrix sub(m.prime(), r, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) sub(i, j) = m(rs[a][i], cs[b][j]);
            out(a, b) = k_det(sub);
        }
    return out;
}

PlueckerCheck pluecker_check(const dvr::LatticeConfiguration& config, std::size_t reference, const rep::SubRep& points) {
    if (points.spaces.size() != config.size()) throw InvalidInput("one point per lattice class is required");
    const std::size_t r = points.spaces.front().dim();
    PlueckerCheck out;
    const auto& ref = config.lattice(reference);
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (points.spaces[i].dim() != r) throw InvalidInput("points must have a common dimension");
        out.coordinates.push_back(pluecker_coordinates(points.spaces[i]));
        int shift = i == reference ? 0 : config.n(i, reference);
        dvr::KMatrix change = ref.coordinates(config.lattice(i).basis().shifted(shift));
        out.compounds.push_back(compound(change, r));
        out.transported.push_back(out.compounds.back().residue().apply(out.coordinates.back()));
    }
    Zp f{config.prime()};
    out.minors_vanish = true;
    for (std::size_t i = 0; i < out.transported.size(); ++i)
        for (std::size_t j = i + 1; j < out.transported.size(); ++j)
            for (std::size_t a = 0; a < out.transported[i].size(); ++a)
                for (std::size_t b = a + 1; b < out.transported[i].size(); ++b) {
                    Fp minor = f.sub(f.mul(out.transported[i][a], out.transported[j][b]),
                                     f.mul(out.transported[i][b], out.transported[j][a]));
                    if (minor) out.minors_vanish = false;
                }
    out.linked = rep::is_subrep(rep::build_M(config), points);
    return out;
}

}  // namespace lq::strata
