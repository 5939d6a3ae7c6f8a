#include "resched/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace resched {

std::optional<Schedule> earliest_feasible(std::span<const int> order, Time budget, const PreparedInstance& prep)
{
    Schedule s;
    s.start.assign(prep.jobs.size(), 0);
    Time free_at = 0;
    for (int pos : order) {
        const Time p = prep.p(pos);
        Time start = std::max<Time>({free_at, prep.orig_C(pos) - budget - p, 0});
        if (start < prep.T2 && start + p > prep.T1)
            start = prep.T2;
        if (start + p > prep.orig_C(pos) + budget)
            return std::nullopt;
        s.start[static_cast<std::size_t>(pos - 1)] = start;
        free_at = start + p;
    }
    return s;
}

std::optional<OracleResult> brute_force(const PreparedInstance& prep, Time k, const Rational& mu,
                                        OracleLimits limits, OrderSpace space)
{
    const int n = prep.n();
    const Time max_budget = std::min(k, prep.T2 + prep.total_p);
    if (n > limits.max_n)
        throw OracleLimitError("oracle limited to n <= " + std::to_string(limits.max_n));
    if (max_budget > limits.max_k)
        throw OracleLimitError("oracle limited to k <= " + std::to_string(limits.max_k));

    // mu * dmax + Z scaled by mu's denominator keeps the comparison integral.
    auto scaled = [&](Time dmax, Cost z) {
        return static_cast<__int128>(mu.num()) * dmax + static_cast<__int128>(mu.den()) * z;
    };

    std::optional<OracleResult> result;
    __int128 best_key = 0;
    std::set<Schedule> optima;
    std::uint64_t explored = 0;

    auto consider = [&](const std::vector<int>& order) {
        for (Time d = 0; d <= max_budget; ++d) {
            ++explored;
            auto sched = earliest_feasible(order, d, prep);
            if (!sched)
                continue;
            Cost z = 0;
            Time dmax = 0;
            for (int pos = 1; pos <= n; ++pos) {
                Time c = sched->start_of(pos) + prep.p(pos);
                z += prep.w(pos) * c;
                dmax = std::max(dmax, c > prep.orig_C(pos) ? c - prep.orig_C(pos) : prep.orig_C(pos) - c);
            }
            __int128 key = scaled(dmax, z);
            if (!result || key < best_key) {
                best_key = key;
                optima.clear();
                optima.insert(*sched);
                result.emplace();
                result->best = make_report(prep, *sched, mu, "oracle", std::nullopt);
            } else if (key == best_key) {
                optima.insert(*sched);
                SolveReport candidate = make_report(prep, *sched, mu, "oracle", std::nullopt);
                if (better_report(candidate, result->best))
                    result->best = std::move(candidate);
            }
        }
    };

    std::vector<int> order(static_cast<std::size_t>(n));
    if (space == OrderSpace::AllPermutations) {
        std::iota(order.begin(), order.end(), 1);
        do {
            consider(order);
        } while (std::next_permutation(order.begin(), order.end()));
    } else {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            order.clear();
            for (int pos = 1; pos <= n; ++pos)
                if (mask & (1u << (pos - 1))) order.push_back(pos);
            for (int pos = 1; pos <= n; ++pos)
                if (!(mask & (1u << (pos - 1)))) order.push_back(pos);
            consider(order);
        }
    }

    if (result) {
        result->all_optima.assign(optima.begin(), optima.end());
        result->explored = explored;
    }
    return result;
}

} // namespace resched
