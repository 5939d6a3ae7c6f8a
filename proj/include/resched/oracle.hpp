#pragma once

#include "resched/core.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace resched {

// Exhaustive reference solver. It knows nothing about the structure the
// dynamic programs rely on: it tries every job order with every integer
// deviation budget and schedules each job as early as the budget allows.

struct OracleLimits {
    int max_n = 8;
    Time max_k = 50;
};

enum class OrderSpace {
    AllPermutations,
    SplitMonotone, // an increasing run of positions followed by the remaining ones, increasing
};

struct OracleResult {
    SolveReport best;
    std::vector<Schedule> all_optima;
    std::uint64_t explored = 0;
};

class OracleLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Greedy earliest-start schedule for a fixed order under budget D: each job
/// completes no earlier than orig_C - D, never inside the window, and the
/// result is rejected if some job completes after orig_C + D.
std::optional<Schedule> earliest_feasible(std::span<const int> order, Time budget, const PreparedInstance& prep);

/// Minimum of mu * dmax + Z over every (order, budget) pair. Returns nullopt
/// when no feasible schedule exists. Budgets above T2 + P behave exactly
/// like T2 + P, so the sweep stops there and the k limit applies to
/// min(k, T2 + P).
std::optional<OracleResult> brute_force(const PreparedInstance& prep, Time k, const Rational& mu,
                                        OracleLimits limits = {}, OrderSpace space = OrderSpace::AllPermutations);

} // namespace resched
