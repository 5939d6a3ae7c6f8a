#pragma once

#include "resched/core.hpp"
#include "resched/guess.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

namespace resched {

// Exact solver for mu = 0. A partial schedule is (j; ell1, ell2; Z): the
// last completion before the window, the last completion after it and the
// weighted completion so far. An idle period before T1 is only ever needed
// with dmax equal to the cap, which fixes its length and finishes the
// schedule immediately.

struct Dp2State {
    int j = 0;
    Time ell1 = 0;
    Time ell2 = 0;
    Cost z = 0;

    friend bool operator==(const Dp2State&, const Dp2State&) = default;
};

Dp2State seed_state2(const GuessContext& ctx, const PreparedInstance& prep);
Dp2State extend_later2(const Dp2State& state, const PreparedInstance& prep);
std::optional<Dp2State> extend_earlier2(const Dp2State& state, const PreparedInstance& prep,
                                        const GuessContext& ctx, Time k);

bool idle2_triggered(const Dp2State& state, const PreparedInstance& prep, Time k);

struct Dp2IdleCompletion {
    Dp2State final_state;
    int gap_job = 0;
    Time gap_start = 0;
    int run_end = 0;
};

/// J_{j+1} starts at orig_C - p - k, then J_{j+2} .. J_{last_stage} follow
/// it before T1 and everything else goes after ell2. nullopt when the
/// trigger fails or the run would cross T1.
std::optional<Dp2IdleCompletion> extend_idle2_and_complete(const Dp2State& state, const PreparedInstance& prep,
                                                           const GuessContext& ctx, Time k);

/// Jobs after last_stage appended after ell2.
Dp2State complete_tail2(const Dp2State& state, const PreparedInstance& prep);

SolveResult solve_dp2(const PreparedInstance& prep, Time k);

// Per-guess search shared with the approximation scheme, which swaps the
// exact state key for a geometric box.

using StateKey = std::array<std::int64_t, 3>;

class StateBinning {
public:
    virtual ~StateBinning() = default;
    virtual StateKey key(const Dp2State& state) const = 0;
    /// Whether `incoming` evicts `stored` when both land on one key.
    virtual bool replaces(const Dp2State& incoming, const Dp2State& stored) const = 0;
};

class ExactBinning final : public StateBinning {
public:
    StateKey key(const Dp2State& s) const override { return {s.ell1, s.ell2, s.z}; }
    bool replaces(const Dp2State&, const Dp2State&) const override { return false; }
};

struct Dp2SearchStats {
    std::size_t peak_stage_states = 0;
    std::size_t final_states = 0;
};

struct Dp2GuessResult {
    Schedule schedule;
    Cost z = 0;
    bool idle = false;
    Dp2SearchStats stats;
};

/// Called for every state left in a stage once the stage is complete.
/// Finished schedules, binned together, are reported as stage n + 1.
using StateObserver = std::function<void(int stage, const Dp2State&, const StateKey&)>;

std::optional<Dp2GuessResult> search_dp2_guess(const PreparedInstance& prep, const GuessContext& ctx,
                                               const StateBinning& binning, const StateObserver& observer = {});

} // namespace resched
