#include "resched/dp2.hpp"

#include "resched/log.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace resched {

Dp2State seed_state2(const GuessContext& ctx, const PreparedInstance& prep)
{
    const int a = ctx.a;
    const Time later = prep.T2 + prep.p(a);
    return {a, prep.prefix_p(a - 1), later, ctx.z1 + prep.w(a) * later};
}

Dp2State extend_later2(const Dp2State& state, const PreparedInstance& prep)
{
    const int m = state.j + 1;
    const Time done = state.ell2 + prep.p(m);
    return {m, state.ell1, done, state.z + prep.w(m) * done};
}

std::optional<Dp2State> extend_earlier2(const Dp2State& state, const PreparedInstance& prep,
                                        const GuessContext& ctx, Time k)
{
    const int m = state.j + 1;
    const Time done = state.ell1 + prep.p(m);
    if (done > prep.T1)
        return std::nullopt;
    if (!ctx.starts_before_T2(prep, m) && prep.orig_C(m) - done > k)
        return std::nullopt;
    return Dp2State{m, done, state.ell2, state.z + prep.w(m) * done};
}

bool idle2_triggered(const Dp2State& state, const PreparedInstance& prep, Time k)
{
    const int m = state.j + 1;
    const Time target = prep.orig_C(m) - k;
    return state.ell1 + prep.p(m) < target && target <= prep.T1;
}

std::optional<Dp2IdleCompletion> extend_idle2_and_complete(const Dp2State& state, const PreparedInstance& prep,
                                                           const GuessContext& ctx, Time k)
{
    if (!idle2_triggered(state, prep, k))
        return std::nullopt;
    const int n = prep.n();
    const int m = state.j + 1;
    const int r = std::max(m, ctx.last_stage);

    Dp2IdleCompletion c;
    c.gap_job = m;
    c.gap_start = prep.orig_C(m) - prep.p(m) - k;
    c.run_end = r;
    const Time ell1 = c.gap_start + prep.length_between(m, r);
    if (ell1 > prep.T1) {
        log_debug("dp2 idle run J{}..J{} crosses T1 ({} > {}), branch dropped", m, r, ell1, prep.T1);
        return std::nullopt;
    }
    Cost z = state.z + c.gap_start * prep.weight_between(m, r) + prep.block_completion(m, r);
    Time ell2 = state.ell2;
    if (r < n) {
        z += state.ell2 * prep.weight_between(r + 1, n) + prep.block_completion(r + 1, n);
        ell2 += prep.length_between(r + 1, n);
    }
    c.final_state = {n, ell1, ell2, z};
    return c;
}

Dp2State complete_tail2(const Dp2State& state, const PreparedInstance& prep)
{
    const int n = prep.n();
    const int j = state.j;
    if (j == n)
        return state;
    return {n, state.ell1, state.ell2 + prep.length_between(j + 1, n),
            state.z + prep.block_completion(j + 1, n) + prep.weight_between(j + 1, n) * state.ell2};
}

namespace {

struct KeyHash {
    std::size_t operator()(const StateKey& k) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto v : k)
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

struct Node {
    Dp2State state;
    int parent = -1;
    Side side = Side::Later;
};

struct FinalNode {
    Dp2State state;
    int origin_stage = 0;
    int origin_idx = 0;
    int gap_job = 0; // 0 for a tail completion
    Time gap_start = 0;
    int run_end = 0;
};

// One binned stage: insertion order is kept so iteration stays deterministic.
template <class T>
class BinnedStore {
public:
    explicit BinnedStore(const StateBinning& binning) : binning_(binning) {}

    void offer(T item)
    {
        const StateKey key = binning_.key(item.state);
        auto [it, fresh] = index_.try_emplace(key, items_.size());
        if (fresh)
            items_.push_back(std::move(item));
        else if (binning_.replaces(item.state, items_[it->second].state))
            items_[it->second] = std::move(item);
    }

    std::vector<T> release() { return std::move(items_); }
    const std::vector<T>& items() const { return items_; }

private:
    const StateBinning& binning_;
    std::unordered_map<StateKey, std::size_t, KeyHash> index_;
    std::vector<T> items_;
};

} // namespace

std::optional<Dp2GuessResult> search_dp2_guess(const PreparedInstance& prep, const GuessContext& ctx,
                                               const StateBinning& binning, const StateObserver& observer)
{
    const int n = prep.n();
    const Time k = ctx.cap;
    std::vector<std::vector<Node>> stages;
    Dp2SearchStats stats;

    {
        BinnedStore<Node> seed(binning);
        seed.offer(Node{seed_state2(ctx, prep), -1, Side::Later});
        stages.push_back(seed.release());
    }
    BinnedStore<FinalNode> finals(binning);

    for (int j = ctx.a; j < ctx.last_stage; ++j) {
        const auto& current = stages.back();
        BinnedStore<Node> next(binning);
        for (int idx = 0; idx < static_cast<int>(current.size()); ++idx) {
            const Dp2State& s = current[idx].state;
            next.offer(Node{extend_later2(s, prep), idx, Side::Later});
            if (auto e = extend_earlier2(s, prep, ctx, k))
                next.offer(Node{*e, idx, Side::Earlier});
            if (auto c = extend_idle2_and_complete(s, prep, ctx, k))
                finals.offer(FinalNode{c->final_state, j, idx, c->gap_job, c->gap_start, c->run_end});
        }
        stages.push_back(next.release());
        stats.peak_stage_states = std::max(stats.peak_stage_states, stages.back().size());
    }
    stats.peak_stage_states = std::max(stats.peak_stage_states, stages.front().size());

    const int last = ctx.last_stage;
    for (int idx = 0; idx < static_cast<int>(stages.back().size()); ++idx)
        finals.offer(FinalNode{complete_tail2(stages.back()[idx].state, prep), last, idx, 0, 0, 0});
    stats.final_states = finals.items().size();

    if (observer) {
        for (std::size_t s = 0; s < stages.size(); ++s)
            for (const Node& node : stages[s])
                observer(ctx.a + static_cast<int>(s), node.state, binning.key(node.state));
        for (const FinalNode& f : finals.items())
            observer(n + 1, f.state, binning.key(f.state));
    }

    auto reconstruct = [&](const FinalNode& f) {
        Placement p;
        p.side.assign(static_cast<std::size_t>(n), Side::Later);
        for (int pos = 1; pos < ctx.a; ++pos)
            p.side[pos - 1] = Side::Earlier;
        int idx = f.origin_idx;
        for (int pos = f.origin_stage; pos > ctx.a; --pos) {
            const Node& node = stages[pos - ctx.a][idx];
            p.side[pos - 1] = node.side;
            idx = node.parent;
        }
        if (f.gap_job != 0) {
            for (int pos = f.gap_job; pos <= f.run_end; ++pos)
                p.side[pos - 1] = Side::Earlier;
            p.gap_job = f.gap_job;
            p.gap_start = f.gap_start;
        }
        return build_schedule(prep, p);
    };

    std::optional<Dp2GuessResult> best;
    std::optional<SolveReport> best_report;
    for (const FinalNode& f : finals.items()) {
        if (best && f.state.z > best->z)
            continue;
        Schedule sched = reconstruct(f);
        SolveReport r = make_report(prep, sched, Rational(0), "", ctx.a);
        if (r.eval.Z != f.state.z)
            throw std::logic_error("dp2 reconstruction disagrees with its recurrence");
        if (r.eval.dmax > k)
            throw std::logic_error("dp2 produced a schedule above the deviation cap");
        if (f.gap_job != 0 && r.eval.dmax != k)
            throw std::logic_error("dp2 idle completion does not sit at the deviation cap");
        if (!best_report || better_report(r, *best_report)) {
            best_report = r;
            best = Dp2GuessResult{std::move(sched), f.state.z, f.gap_job != 0, stats};
        }
    }
    return best;
}

SolveResult solve_dp2(const PreparedInstance& prep, Time k)
{
    const Rational zero(0);
    if (auto early = resolve_non_trivial(prep, k, zero, "dp2"))
        return *early;

    const auto candidates = candidate_first_later_jobs(prep, k);
    if (candidates.empty())
        throw std::logic_error("non-trivial instance without a first-later candidate");

    const ExactBinning exact;
    std::optional<SolveReport> best;
    for (const auto& cand : candidates) {
        const GuessContext ctx = make_guess_context(prep, cand.a, k);
        auto found = search_dp2_guess(prep, ctx, exact);
        if (!found)
            continue;
        log_debug("dp2 guess a={} Z={} peak states={}", cand.a, found->z, found->stats.peak_stage_states);
        SolveReport r = make_report(prep, std::move(found->schedule), zero, "dp2", cand.a);
        if (!best || better_report(r, *best))
            best = std::move(r);
    }
    SolveResult result;
    result.report = std::move(best);
    return result;
}

} // namespace resched
