#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lq/rep/representation.hpp"
#include "lq/strata/strata.hpp"

namespace lq::strata {

// Every r-dimensional subspace of F_p^n, in a fixed order.
std::vector<Subspace> grassmannian(std::uint32_t p, std::size_t n, std::size_t r);

// Number of candidate subspace checks allowed for an enumeration. The LQ_BUDGET
// environment variable, when set, caps every request.
std::uint64_t effective_budget(std::uint64_t requested);
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

// All subrepresentations with dimension r at every vertex. Throws BudgetExceeded once
// more than `budget` candidate checks would be needed.
std::vector<SubRep> brute_force_points(const rep::QuiverRep& m, std::size_t r, std::uint64_t budget = kDefaultBudget);

// Φ image of the enumerated points with the number of points over each tuple.
std::map<StrataTuple, std::size_t> brute_force_strata(const TreeRep& m, std::size_t r, std::uint64_t budget = kDefaultBudget);

}  // namespace lq::strata
