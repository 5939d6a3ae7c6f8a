#include "resched/dp1.hpp"

#include "resched/log.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace resched {

Dp1State seed_state(const GuessContext& ctx, const PreparedInstance& prep)
{
    const int a = ctx.a;
    return {a, prep.prefix_p(a - 1), a - 1, ctx.z1 + prep.w(a) * (prep.T2 + prep.p(a))};
}

Dp1State extend_later(const Dp1State& state, const PreparedInstance& prep, const GuessContext&)
{
    const int m = state.j + 1;
    return {m, state.ell, state.e, state.z + prep.w(m) * (prep.T2 + prep.prefix_p(m) - state.ell)};
}

std::optional<Dp1State> extend_earlier(const Dp1State& state, const PreparedInstance& prep,
                                       const GuessContext& ctx, Time k)
{
    const int m = state.j + 1;
    const Time done = state.ell + prep.p(m);
    if (done > prep.T1)
        return std::nullopt;
    if (!ctx.starts_before_T2(prep, m) && prep.orig_C(m) - done > k)
        return std::nullopt;
    return Dp1State{m, done, m, state.z + prep.w(m) * done};
}

Time earlier_deviation(const Dp1State& state, const PreparedInstance& prep)
{
    // Jobs before the window are packed from 0, so e completes at ell.
    return prep.prefix_p(state.e) - state.ell;
}

bool idle_triggered(const Dp1State& state, const PreparedInstance& prep, const GuessContext& ctx)
{
    const int m = state.j + 1;
    const Time done = state.ell + prep.p(m);
    const Time floor_dev = std::max(earlier_deviation(state, prep), ctx.delta_a);
    return done < prep.T1 && prep.orig_C(m) - done > floor_dev;
}

std::vector<IdleCompletion> extend_idle_and_complete(const Dp1State& state, const PreparedInstance& prep,
                                                     const GuessContext& ctx, Time k, const Rational& mu)
{
    std::vector<IdleCompletion> out;
    const int n = prep.n();
    const int m = state.j + 1;
    const Time done = state.ell + prep.p(m);
    const Time slack = prep.orig_C(m) - done; // deviation of J_m with no idle
    const Time floor_dev = std::max(earlier_deviation(state, prep), ctx.delta_a);

    const Time lo = std::max<Time>(1, slack - k);
    const Time hi = std::min(slack - floor_dev, prep.T1 - done);
    if (lo > hi)
        return out;

    // run_end >= s exactly when idle <= T1 - ell - (P_s - P_{m-1}).
    std::set<Time> probes{lo, hi};
    for (int s = m; s <= n; ++s) {
        Time t = prep.T1 - state.ell - prep.length_between(m, s);
        if (t < lo)
            break;
        if (t <= hi) probes.insert(t);
        if (t + 1 <= hi) probes.insert(t + 1);
    }

    const Time later_end = prep.T2 + prep.prefix_p(state.j) - state.ell;
    for (Time idle : probes) {
        IdleCompletion c;
        c.gap_job = m;
        c.idle = idle;
        c.gap_start = state.ell + idle;
        int r = m;
        while (r < n && c.gap_start + prep.length_between(m, r + 1) <= prep.T1)
            ++r;
        c.run_end = r;
        c.z = state.z + c.gap_start * prep.weight_between(m, r) + prep.block_completion(m, r);
        if (r < n)
            c.z += later_end * prep.weight_between(r + 1, n) + prep.block_completion(r + 1, n);
        c.dmax = slack - idle;
        c.objective = mu * Rational(c.dmax) + Rational(c.z);
        out.push_back(c);
    }
    return out;
}

TailCompletion complete_tail(const Dp1State& state, const PreparedInstance& prep, const GuessContext& ctx,
                             const Rational& mu)
{
    const int n = prep.n();
    const int j = state.j;
    TailCompletion t;
    t.z = state.z + ctx.z4_base;
    if (j < n)
        t.z += prep.weight_between(j + 1, n) * (prep.T2 + prep.prefix_p(j) - state.ell);
    t.dmax = std::max(earlier_deviation(state, prep), ctx.delta_a);
    t.objective = mu * Rational(t.dmax) + Rational(t.z);
    return t;
}

Placement idle_placement(std::vector<Side> sides, const IdleCompletion& done, int n)
{
    Placement p;
    p.side = std::move(sides);
    p.side.resize(static_cast<std::size_t>(n), Side::Later);
    for (int pos = done.gap_job; pos <= done.run_end; ++pos)
        p.side[pos - 1] = Side::Earlier;
    p.gap_job = done.gap_job;
    p.gap_start = done.gap_start;
    return p;
}

namespace {

struct Node {
    Time ell;
    int e;
    Cost z;
    int parent;
    Side side;
};

struct KeyHash {
    std::size_t operator()(const std::array<std::int64_t, 3>& k) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto v : k) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class GuessSearch {
public:
    GuessSearch(const PreparedInstance& prep, const GuessContext& ctx, Time k, const Rational& mu,
                std::optional<SolveReport>& best)
        : prep_(prep), ctx_(ctx), k_(k), mu_(mu), best_(best)
    {
    }

    void run()
    {
        const Dp1State seed = seed_state(ctx_, prep_);
        stages_.push_back({Node{seed.ell, seed.e, seed.z, -1, Side::Later}});

        for (int j = ctx_.a; j < ctx_.last_stage; ++j) {
            const auto& current = stages_.back();
            std::vector<Node> next;
            std::unordered_map<std::array<std::int64_t, 3>, int, KeyHash> index;
            auto push = [&](const Dp1State& s, int parent, Side side) {
                auto [it, fresh] = index.try_emplace({s.ell, s.e, s.z}, static_cast<int>(next.size()));
                if (fresh)
                    next.push_back(Node{s.ell, s.e, s.z, parent, side});
            };
            for (int idx = 0; idx < static_cast<int>(current.size()); ++idx) {
                const Node& node = current[idx];
                const Dp1State state{j, node.ell, node.e, node.z};
                push(extend_later(state, prep_, ctx_), idx, Side::Later);
                if (auto s = extend_earlier(state, prep_, ctx_, k_))
                    push(*s, idx, Side::Earlier);
                if (idle_triggered(state, prep_, ctx_))
                    for (const IdleCompletion& c : extend_idle_and_complete(state, prep_, ctx_, k_, mu_))
                        consider(c.objective, c.dmax, c.z,
                                 [&] { return idle_placement(sides_to(j, idx), c, prep_.n()); });
            }
            stages_.push_back(std::move(next));
            peak_ = std::max(peak_, stages_.back().size());
        }

        const int j = ctx_.last_stage;
        const auto& last = stages_.back();
        for (int idx = 0; idx < static_cast<int>(last.size()); ++idx) {
            const Node& node = last[idx];
            const TailCompletion t = complete_tail(Dp1State{j, node.ell, node.e, node.z}, prep_, ctx_, mu_);
            consider(t.objective, t.dmax, t.z, [&] {
                Placement p;
                p.side = sides_to(j, idx);
                p.side.resize(prep_.jobs.size(), Side::Later);
                return p;
            });
        }
        log_debug("dp1 guess a={} stages={} peak states={}", ctx_.a, stages_.size(), peak_);
    }

private:
    std::vector<Side> sides_to(int j, int idx) const
    {
        std::vector<Side> sides(static_cast<std::size_t>(j), Side::Earlier);
        sides[ctx_.a - 1] = Side::Later;
        for (int pos = j; pos > ctx_.a; --pos) {
            const Node& node = stages_[pos - ctx_.a][idx];
            sides[pos - 1] = node.side;
            idx = node.parent;
        }
        return sides;
    }

    template <class MakePlacement>
    void consider(const Rational& objective, Time dmax, Cost z, MakePlacement make)
    {
        if (best_) {
            const auto& b = best_->eval;
            if (objective > b.objective || (objective == b.objective && dmax > b.dmax))
                return;
        }
        SolveReport r = make_report(prep_, build_schedule(prep_, make()), mu_, "dp1", ctx_.a);
        if (r.eval.Z != z || r.eval.dmax != dmax)
            throw std::logic_error("dp1 reconstruction disagrees with its recurrence");
        if (!best_ || better_report(r, *best_))
            best_ = std::move(r);
    }

    const PreparedInstance& prep_;
    const GuessContext& ctx_;
    Time k_;
    const Rational& mu_;
    std::optional<SolveReport>& best_;
    std::vector<std::vector<Node>> stages_;
    std::size_t peak_ = 1;
};

} // namespace

SolveResult solve_dp1(const PreparedInstance& prep, Time k, const Rational& mu)
{
    if (auto early = resolve_non_trivial(prep, k, mu, "dp1"))
        return *early;

    const auto candidates = candidate_first_later_jobs(prep, k);
    if (candidates.empty())
        throw std::logic_error("non-trivial instance without a first-later candidate");

    std::optional<SolveReport> best;
    for (const auto& cand : candidates) {
        const GuessContext ctx = make_guess_context(prep, cand.a, k);
        GuessSearch(prep, ctx, k, mu, best).run();
    }
    SolveResult result;
    result.report = std::move(best);
    return result;
}

} // namespace resched
