#include "lq/strata/brute_force.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>

#include "lq/error.hpp"

namespace lq::strata {

std::vector<Subspace> grassmannian(std::uint32_t p, std::size_t n, std::size_t r) {
    std::vector<Subspace> out;
    if (r > n) return out;
    if (r == 0) return {Subspace(p, n)};
    std::vector<bool> choose(n, false);
    std::fill(choose.begin(), choose.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
        std::vector<std::size_t> pivots;
        for (std::size_t j = 0; j < n; ++j)
            if (choose[j]) pivots.push_back(j);
        // Free slots of the reduced echelon form: right of the pivot, not a pivot column.
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = pivots[i] + 1; j < n; ++j)
                if (!choose[j]) free.push_back({i, j});
        std::vector<Fp> vals(free.size(), 0);
        while (true) {
            FieldMatrix m(p, r, n);
            for (std::size_t i = 0; i < r; ++i) m(i, pivots[i]) = 1;
            for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = vals[k];
            out.push_back(Subspace::row_space(m));
            std::size_t k = 0;
            while (k < vals.size() && ++vals[k] == p) vals[k++] = 0;
            if (k == vals.size()) break;
        }
    } while (std::prev_permutation(choose.begin(), choose.end()));
    return out;
}

std::uint64_t effective_budget(std::uint64_t requested) {
    if (const char* env = std::getenv("LQ_BUDGET")) {
        try {
            std::uint64_t cap = std::stoull(env);
            return std::min(requested, cap);
        } catch (const std::exception&) {
            throw InvalidInput(std::string("LQ_BUDGET is not a number: ") + env);
        }
    }
    return requested;
}

std::vector<SubRep> brute_force_points(const rep::QuiverRep& m, std::size_t r, std::uint64_t budget) {
    budget = effective_budget(budget);
    const std::size_t n = m.size();
    // Visit vertices breadth first along arrows so constraints bite early.
    std::vector<std::size_t> order;
    std::vector<bool> seen(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        order.push_back(start);
        for (std::size_t h = order.size() - 1; h < order.size(); ++h)
            for (const auto& a : m.quiver.arrows()) {
                std::size_t other = a.from == order[h] ? a.to : a.to == order[h] ? a.from : n;
                if (other < n && !seen[other]) {
                    seen[other] = true;
                    order.push_back(other);
                }
            }
    }
    std::vector<std::vector<Subspace>> cells(n);
    for (std::size_t v = 0; v < n; ++v) cells[v] = grassmannian(m.p, m.dims[v], r);
    std::vector<std::size_t> pos(n, n);
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = k;

    std::vector<SubRep> out;
    std::vector<const Subspace*> chosen(n, nullptr);
    std::uint64_t spent = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == n) {
            SubRep u;
            for (auto* s : chosen) u.spaces.push_back(*s);
            out.push_back(std::move(u));
            return;
        }
        std::size_t v = order[k];
        for (const auto& cand : cells[v]) {
            if (++spent > budget) throw BudgetExceeded("brute-force enumeration exceeded its budget of " + std::to_string(budget) + " checks");
            bool ok = true;
            const auto& arrows = m.quiver.arrows();
            for (std::size_t a = 0; a < arrows.size() && ok; ++a) {
                std::size_t s = arrows[a].from, t = arrows[a].to;
                if (s == v && pos[t] < k) ok = chosen[t]->contains(cand.image(m.maps[a]));
                else if (t == v && pos[s] < k) ok = cand.contains(chosen[s]->image(m.maps[a]));
            }
            if (!ok) continue;
            chosen[v] = &cand;
            rec(k + 1);
        }
        chosen[v] = nullptr;
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<StrataTuple, std::size_t> brute_force_strata(const TreeRep& m, std::size_t r, std::uint64_t budget) {
    std::map<StrataTuple, std::size_t> out;
    for (const auto& u : brute_force_points(m.rep(), r, budget)) ++out[phi(m, u)];
    return out;
}

}  // namespace lq::strata
