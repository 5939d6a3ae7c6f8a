#include "resched/guess.hpp"

#include <algorithm>
#include <stdexcept>

namespace resched {

GuessContext make_guess_context(const PreparedInstance& prep, int a, Time cap)
{
    if (!prep.j1 || a < 1 || a > *prep.j1)
        throw std::invalid_argument("guess must lie in 1..j1");
    GuessContext ctx;
    ctx.a = a;
    ctx.delta_a = prep.T2 - prep.orig_S(a);
    if (ctx.delta_a > cap)
        throw std::invalid_argument("guess exceeds the deviation cap");
    ctx.cap = cap;
    ctx.z1 = prep.z_prefix(a - 1);
    ctx.last_stage = std::max(a, prep.last_earlier_candidate(cap));
    ctx.z4_base = prep.block_completion(ctx.last_stage + 1, prep.n());
    return ctx;
}

} // namespace resched
