#pragma once

#include "resched/core.hpp"
#include "resched/guess.hpp"

#include <optional>
#include <vector>

namespace resched {

// Exact pseudo-polynomial solver for mu * dmax + sum w_j C_j.
//
// After guessing the job J_a that starts at T2, jobs a+1 .. last_stage are
// assigned one at a time to either side of the window. A partial schedule
// is identified by (j; ell, e; Z): ell is the processing time packed before
// the window (no idle), e the last job placed there. Inserting an idle
// period finishes the schedule on the spot.

struct Dp1State {
    int j = 0;
    Time ell = 0;
    int e = 0;
    Cost z = 0;

    friend bool operator==(const Dp1State&, const Dp1State&) = default;
};

Dp1State seed_state(const GuessContext& ctx, const PreparedInstance& prep);

/// J_{j+1} appended to the part after T2.
Dp1State extend_later(const Dp1State& state, const PreparedInstance& prep, const GuessContext& ctx);

/// J_{j+1} appended before T1 with no idle; nullopt if it does not fit.
std::optional<Dp1State> extend_earlier(const Dp1State& state, const PreparedInstance& prep,
                                       const GuessContext& ctx, Time k);

/// Deviation of job e under the partial schedule (0 for the sentinel a-1).
Time earlier_deviation(const Dp1State& state, const PreparedInstance& prep);

bool idle_triggered(const Dp1State& state, const PreparedInstance& prep, const GuessContext& ctx);

/// One full schedule obtained by idling `idle` units before J_{j+1}, running
/// J_{j+1} .. J_{run_end} before T1 and the rest after the current later load.
struct IdleCompletion {
    int gap_job = 0;
    Time idle = 0;
    Time gap_start = 0;
    int run_end = 0;
    Cost z = 0;
    Time dmax = 0;
    Rational objective;
};

/// Candidate idle lengths are only the endpoints of the sub-ranges on which
/// the set of jobs fitting before T1 stays fixed; the objective is linear
/// inside each sub-range. Empty when no idle length is admissible.
std::vector<IdleCompletion> extend_idle_and_complete(const Dp1State& state, const PreparedInstance& prep,
                                                     const GuessContext& ctx, Time k, const Rational& mu);

struct TailCompletion {
    Cost z = 0;
    Time dmax = 0;
    Rational objective;
};

/// All jobs after last_stage go after T2.
TailCompletion complete_tail(const Dp1State& state, const PreparedInstance& prep, const GuessContext& ctx,
                             const Rational& mu);

/// Placement for an idle completion given the sides of jobs 1..j.
Placement idle_placement(std::vector<Side> sides, const IdleCompletion& done, int n);

SolveResult solve_dp1(const PreparedInstance& prep, Time k, const Rational& mu);

} // namespace resched
