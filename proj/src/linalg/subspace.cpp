#include "lq/linalg/subspace.hpp"

#include "lq/error.hpp"

namespace lq {

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : p_(p), ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient) {
    return row_space(FieldMatrix::identity(p, ambient));
}

Subspace Subspace::span(std::uint32_t p, std::size_t ambient, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Subspace(p, ambient);
    return row_space(FieldMatrix::from_vectors(p, ambient, vectors));
}

Subspace Subspace::row_space(const FieldMatrix& m) {
    Subspace s(m.prime(), m.cols());
    s.basis_ = m.rref().reduced;
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw InvalidInput("vector not in ambient space");
    // Reduce v against the echelon basis; v is inside exactly when nothing survives.
    Zp f{p_};
    Vec w = v;
    std::size_t lead = 0;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        while (basis_(i, lead) == 0) ++lead;  // rows are in echelon form
        Fp c = w[lead];
        if (c == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) w[j] = f.sub(w[j], f.mul(c, basis_(i, j)));
    }
    return is_zero_vector(w);
}

bool Subspace::contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InvalidInput("sum of subspaces of different spaces");
    return row_space(basis_.vstack(other.basis_));
}

// Zassenhaus: row reduce [A A; B 0]; rows whose left half vanishes carry the intersection.
Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InvalidInput("intersection of subspaces of different spaces");
    if (dim() == 0 || other.dim() == 0) return Subspace(p_, ambient_);
    FieldMatrix top = basis_.hstack(basis_);
    FieldMatrix bottom = other.basis_.hstack(FieldMatrix(p_, other.dim(), ambient_));
    auto [red, pivots] = top.vstack(bottom).rref();
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] < ambient_) continue;
        Vec v(ambient_);
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = red(i, ambient_ + j);
        rows.push_back(std::move(v));
    }
    return span(p_, ambient_, rows);
}

Subspace Subspace::image(const FieldMatrix& map) const {
    if (map.cols() != ambient_) throw InvalidInput("map domain does not match subspace");
    if (dim() == 0) return Subspace(p_, map.rows());
    return row_space(basis_ * map.transpose());
}

Subspace Subspace::preimage(const FieldMatrix& map, const Subspace& target) {
    if (map.rows() != target.ambient()) throw InvalidInput("map codomain does not match target");
    // Annihilator rows Y of the target: y in target^perp. Then x is in the preimage iff Y map x = 0.
    FieldMatrix annihilator = target.dim() == 0 ? FieldMatrix::identity(map.prime(), map.rows())
                                                : target.basis().kernel();
    if (annihilator.rows() == 0) return full(map.prime(), map.cols());
    return row_space((annihilator * map).kernel());
}

std::vector<Vec> Subspace::greedy_extension(const std::vector<Vec>& pool, std::size_t target_dim) const {
    std::vector<Vec> chosen;
    Subspace acc = *this;
    for (const auto& v : pool) {
        if (acc.dim() >= target_dim) break;
        if (acc.contains(v)) continue;
        chosen.push_back(v);
        acc = acc + span(p_, ambient_, {v});
    }
    return chosen;
}

std::vector<Vec> Subspace::complement_in(const Subspace& outer) const {
    return greedy_extension(outer.basis_vectors(), outer.dim());
}

std::strong_ordering Subspace::operator<=>(const Subspace& o) const {
    if (auto c = ambient_ <=> o.ambient_; c != 0) return c;
    if (auto c = dim() <=> o.dim(); c != 0) return c;
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j)
            if (auto c = basis_(i, j) <=> o.basis_(i, j); c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace lq
