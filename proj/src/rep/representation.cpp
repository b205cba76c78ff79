#include "lq/rep/representation.hpp"

#include <functional>
#include <map>

#include "lq/error.hpp"

namespace lq::rep {

const FieldMatrix& QuiverRep::map(std::size_t from, std::size_t to) const {
    auto a = quiver.arrow_index(from, to);
    if (!a) throw InvalidInput("no arrow " + std::to_string(from) + " -> " + std::to_string(to));
    return maps[*a];
}

FieldMatrix QuiverRep::path_map(const quiver::Path& path) const {
    if (path.empty()) throw InvalidInput("empty path");
    FieldMatrix acc = FieldMatrix::identity(p, dims[path.front()]);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) acc = map(path[k], path[k + 1]) * acc;
    return acc;
}

QuiverRep build_M(const dvr::LatticeConfiguration& config) {
    QuiverRep m;
    m.quiver = quiver::WeightedQuiver::from_configuration(config);
    m.p = config.prime();
    m.dims.assign(config.size(), config.dim());
    for (const auto& a : m.quiver.arrows()) m.maps.push_back(config.induced_map(a.from, a.to));
    return m;
}

std::vector<std::size_t> SubRep::dims() const {
    std::vector<std::size_t> d;
    for (const auto& s : spaces) d.push_back(s.dim());
    return d;
}

bool is_subrep(const QuiverRep& m, const SubRep& u) {
    if (u.spaces.size() != m.size()) throw InvalidInput("subrepresentation has the wrong number of vertices");
    for (std::size_t v = 0; v < m.size(); ++v)
        if (u.spaces[v].ambient() != m.dims[v]) throw InvalidInput("subspace lives in the wrong ambient space");
    const auto& arrows = m.quiver.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a)
        if (!u.spaces[arrows[a].to].contains(u.spaces[arrows[a].from].image(m.maps[a]))) return false;
    return true;
}

namespace {
// Coordinates of v in the canonical basis of s (v must lie in s).
Vec coordinates(const Subspace& s, const Vec& v) {
    auto c = s.basis().transpose().solve(v);
    if (!c) throw InvalidInput("vector outside the subspace");
    return *c;
}
}  // namespace

QuiverRep restrict(const QuiverRep& m, const SubRep& u) {
    if (!is_subrep(m, u)) throw NotASubrepresentation("restrict needs a subrepresentation");
    QuiverRep r;
    r.quiver = m.quiver;
    r.p = m.p;
    r.dims = u.dims();
    const auto& arrows = m.quiver.arrows();
    for (std::size_t a = 0; a < arrows.size(); ++a) {
        const Subspace& src = u.spaces[arrows[a].from];
        const Subspace& dst = u.spaces[arrows[a].to];
        FieldMatrix f(m.p, dst.dim(), src.dim());
        for (std::size_t i = 0; i < src.dim(); ++i) {
            Vec c = coordinates(dst, m.maps[a].apply(src.basis().row(i)));
            for (std::size_t k = 0; k < dst.dim(); ++k) f(k, i) = c[k];
        }
        r.maps.push_back(std::move(f));
    }
    return r;
}

std::size_t hom_dim(const QuiverRep& a, const QuiverRep& b) {
    if (a.size() != b.size() || a.quiver.arrows() != b.quiver.arrows()) throw InvalidInput("representations on different quivers");
    Zp f{a.p};
    std::vector<std::size_t> offset(a.size() + 1, 0);
    for (std::size_t v = 0; v < a.size(); ++v) offset[v + 1] = offset[v] + b.dims[v] * a.dims[v];
    const std::size_t unknowns = offset.back();
    std::vector<Vec> rows;
    const auto& arrows = a.quiver.arrows();
    for (std::size_t e = 0; e < arrows.size(); ++e) {
        std::size_t s = arrows[e].from, t = arrows[e].to;
        const FieldMatrix& fa = a.maps[e];
        const FieldMatrix& fb = b.maps[e];
        // (phi_t fa - fb phi_s)_{ik} = 0 ; phi_v stored row-major in block v.
        for (std::size_t i = 0; i < b.dims[t]; ++i)
            for (std::size_t k = 0; k < a.dims[s]; ++k) {
                Vec row(unknowns, 0);
                for (std::size_t j = 0; j < a.dims[t]; ++j)
                    row[offset[t] + i * a.dims[t] + j] = f.add(row[offset[t] + i * a.dims[t] + j], fa(j, k));
                for (std::size_t j = 0; j < b.dims[s]; ++j)
                    row[offset[s] + j * a.dims[s] + k] = f.sub(row[offset[s] + j * a.dims[s] + k], fb(i, j));
                rows.push_back(std::move(row));
            }
    }
    if (rows.empty() || unknowns == 0) return unknowns;
    return unknowns - FieldMatrix::from_vectors(a.p, unknowns, rows).rank();
}

namespace {

void for_each_path(const quiver::WeightedQuiver& q, std::size_t max_length,
                   const std::function<void(const quiver::Path&)>& visit) {
    quiver::Path path;
    std::function<void()> extend = [&]() {
        visit(path);
        if (path.size() > max_length) return;
        for (const auto& a : q.arrows())
            if (a.from == path.back()) {
                path.push_back(a.to);
                extend();
                path.pop_back();
            }
    };
    for (std::size_t v = 0; v < q.size(); ++v) {
        path = {v};
        extend();
    }
}

}  // namespace

RelationReport check_relations(const dvr::LatticeConfiguration& config, const QuiverRep& m, std::size_t max_length) {
    RelationReport rep;
    std::map<std::pair<std::size_t, std::size_t>, FieldMatrix> direct;
    for (std::size_t i = 0; i < config.size(); ++i)
        for (std::size_t j = 0; j < config.size(); ++j) direct[{i, j}] = i == j ? FieldMatrix::identity(m.p, m.dims[i]) : config.induced_map(i, j);
    // For the mixed-pair report: arrow-simple paths (no repeated vertex) grouped by ends.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<quiver::Path, bool>>> simple;
    for_each_path(m.quiver, max_length, [&](const quiver::Path& path) {
        if (path.size() < 2) return;
        ++rep.paths_checked;
        FieldMatrix composite = m.path_map(path);
        std::size_t s = path.front(), t = path.back();
        bool zero_expected = m.quiver.path_is_zero(path);
        bool good = zero_expected ? composite.is_zero() : composite == direct[{s, t}];
        if (!good) {
            rep.ok = false;
            std::string text = "path";
            for (auto v : path) text += " " + std::to_string(v);
            rep.violations.push_back(text + (zero_expected ? ": composite should vanish" : ": composite differs from induced map"));
        }
        std::vector<bool> seen(m.size(), false);
        for (auto v : path) {
            if (seen[v]) return;
            seen[v] = true;
        }
        simple[{s, t}].push_back({path, composite.is_zero()});
    });
    for (const auto& [ends, paths] : simple)
        for (std::size_t a = 0; a < paths.size(); ++a)
            for (std::size_t b = 0; b < paths.size(); ++b)
                if (paths[a].second && !paths[b].second) rep.mixed_pairs.push_back({paths[a].first, paths[b].first});
    return rep;
}

bool local_linear_independence(const dvr::LatticeConfiguration& config) {
    const std::size_t d = config.dim();
    for (std::size_t v = 0; v < config.size(); ++v) {
        std::size_t total = 0;
        Subspace sum(config.prime(), d);
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (!config.adjacent(i, v)) continue;
            Subspace img = Subspace::full(config.prime(), d).image(config.induced_map(i, v));
            total += img.dim();
            sum = sum + img;
        }
        if (sum.dim() != total) return false;
    }
    return true;
}

bool local_linear_independence(const QuiverRep& m) {
    for (std::size_t v = 0; v < m.size(); ++v) {
        std::size_t total = 0;
        Subspace sum(m.p, m.dims[v]);
        const auto& arrows = m.quiver.arrows();
        for (std::size_t a = 0; a < arrows.size(); ++a) {
            if (arrows[a].to != v) continue;
            Subspace img = Subspace::full(m.p, m.dims[arrows[a].from]).image(m.maps[a]);
            total += img.dim();
            sum = sum + img;
        }
        if (sum.dim() != total) return false;
    }
    return true;
}

std::vector<std::pair<quiver::Path, std::size_t>> rank_profile(const QuiverRep& m, std::size_t max_length) {
    std::vector<std::pair<quiver::Path, std::size_t>> out;
    for_each_path(m.quiver, max_length, [&](const quiver::Path& path) { out.push_back({path, m.path_map(path).rank()}); });
    return out;
}

bool same_rank_profile(const QuiverRep& a, const QuiverRep& b, std::size_t max_length) {
    if (a.dims != b.dims || a.quiver.arrows() != b.quiver.arrows()) return false;
    return rank_profile(a, max_length) == rank_profile(b, max_length);
}

}  // namespace lq::rep
