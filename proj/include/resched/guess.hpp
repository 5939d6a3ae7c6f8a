#pragma once

#include "resched/core.hpp"

namespace resched {

/// Everything fixed once job `a` is chosen to start exactly at T2.
struct GuessContext {
    int a = 0;
    Time delta_a = 0;
    Cost z1 = 0;      // jobs 1..a-1 back to back from time 0
    Cost z4_base = 0; // jobs after last_stage back to back from time 0
    Time cap = 0;
    int last_stage = 0; // max(a, j3(cap)); later stages only take the tail

    /// Jobs a+1 .. j2-1 start before T2 in pi*, so placing them before the
    /// window never exceeds delta_a and skips the cap test.
    bool starts_before_T2(const PreparedInstance& prep, int pos) const
    {
        return !prep.j2 || pos < *prep.j2;
    }
};

GuessContext make_guess_context(const PreparedInstance& prep, int a, Time cap);

} // namespace resched
