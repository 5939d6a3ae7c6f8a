#include "resched/dp1.hpp"
#include "resched/oracle.hpp"

#include "support.hpp"

#include <doctest.h>

#include <functional>

using namespace resched;
using namespace resched::testing;

namespace {

// Walks every state reachable from each guess and hands it to `visit`
// together with the side assignment of jobs 1..j.
void walk_states(const PreparedInstance& prep, Time k,
                 const std::function<void(const GuessContext&, const Dp1State&, const std::vector<Side>&)>& visit)
{
    for (const auto& cand : candidate_first_later_jobs(prep, k)) {
        const GuessContext ctx = make_guess_context(prep, cand.a, k);
        std::vector<Side> sides(static_cast<std::size_t>(cand.a), Side::Earlier);
        sides.back() = Side::Later;
        std::function<void(const Dp1State&)> rec = [&](const Dp1State& s) {
            visit(ctx, s, sides);
            if (s.j >= ctx.last_stage)
                return;
            sides.push_back(Side::Later);
            rec(extend_later(s, prep, ctx));
            if (auto e = extend_earlier(s, prep, ctx, k)) {
                sides.back() = Side::Earlier;
                rec(*e);
            }
            sides.pop_back();
        };
        rec(seed_state(ctx, prep));
    }
}

// Schedule with `idle` units before J_{j+1}, followed by as many jobs as fit
// before T1; everything else goes after the window.
std::optional<Schedule> idle_schedule(const PreparedInstance& prep, const Dp1State& s, const std::vector<Side>& sides,
                                      Time idle)
{
    Placement p;
    p.side = sides;
    p.side.resize(static_cast<std::size_t>(prep.n()), Side::Later);
    Time t = s.ell + idle;
    for (int pos = s.j + 1; pos <= prep.n(); ++pos) {
        if (t + prep.p(pos) > prep.T1)
            break;
        p.side[pos - 1] = Side::Earlier;
        t += prep.p(pos);
    }
    if (p.side[s.j] != Side::Earlier)
        return std::nullopt;
    p.gap_job = s.j + 1;
    p.gap_start = s.ell + idle;
    return build_schedule(prep, p);
}

} // namespace

TEST_SUITE("dp1") {

TEST_CASE("seed_state")
{
    auto prep = prepared_e1(10);
    CHECK(seed_state(make_guess_context(prep, 2, 10), prep) == Dp1State{2, 1, 1, 14});
    CHECK(seed_state(make_guess_context(prep, 1, 10), prep) == Dp1State{1, 0, 0, 10});

    auto single = wspt_sort(make_instance({{2, 3}}, 1, 5, 10));
    CHECK(seed_state(make_guess_context(single, 1, 10), single) == Dp1State{1, 0, 0, 21});
}

TEST_CASE("extend_later and extend_earlier")
{
    auto prep = prepared_e1(10);
    auto ctx2 = make_guess_context(prep, 2, 10);
    auto ctx1 = make_guess_context(prep, 1, 10);

    CHECK(extend_later(seed_state(ctx2, prep), prep, ctx2) == Dp1State{3, 1, 1, 23});
    CHECK(extend_later(seed_state(ctx1, prep), prep, ctx1) == Dp1State{2, 0, 0, 24});

    auto after_j2 = extend_earlier(seed_state(ctx1, prep), prep, ctx1, 10);
    REQUIRE(after_j2);
    CHECK(*after_j2 == Dp1State{2, 2, 2, 14});
    CHECK(extend_later(*after_j2, prep, ctx1) == Dp1State{3, 2, 2, 22});

    CHECK_FALSE(extend_earlier(seed_state(ctx2, prep), prep, ctx2, 10));
    CHECK_FALSE(extend_earlier(*after_j2, prep, ctx1, 10));
}

TEST_CASE("idle trigger predicate")
{
    auto prep = prepared_e1(10);
    auto ctx2 = make_guess_context(prep, 2, 10);
    CHECK_FALSE(idle_triggered(seed_state(ctx2, prep), prep, ctx2));

    // J3 does not fit before T1 even without idling.
    auto tight = wspt_sort(make_instance({{1, 3}, {1, 2}, {6, 5}}, 4, 6, 5));
    auto ctx = make_guess_context(tight, 2, 5);
    const Dp1State s = seed_state(ctx, tight);
    CHECK(s == Dp1State{2, 1, 1, 3 + 2 * 7});
    CHECK_FALSE(idle_triggered(s, tight, ctx));
}

TEST_CASE("complete_tail")
{
    auto prep = prepared_e1(10);
    auto ctx1 = make_guess_context(prep, 1, 10);
    auto t = complete_tail(Dp1State{3, 2, 2, 22}, prep, ctx1, Rational(0));
    CHECK(t.z == 22);
    CHECK(t.dmax == 4);
    CHECK(complete_tail(Dp1State{3, 2, 2, 22}, prep, ctx1, Rational(1)).objective == Rational(26));

    auto prep3 = prepared_e1(3);
    auto ctx2 = make_guess_context(prep3, 2, 3);
    REQUIRE(ctx2.last_stage == 2); // J3 belongs to the tail once k = 3
    auto t3 = complete_tail(Dp1State{2, 1, 1, 14}, prep3, ctx2, Rational(0));
    CHECK(t3.z == 23);
    CHECK(t3.dmax == 3);
}

TEST_CASE("solve_dp1 on the worked instance")
{
    auto r10 = solve_dp1(prepared_e1(10), 10, Rational(0));
    REQUIRE(r10.feasible());
    CHECK(r10.report->eval.objective == Rational(22));
    CHECK(r10.report->schedule.start == std::vector<Time>{4, 0, 5});

    auto r3 = solve_dp1(prepared_e1(3), 3, Rational(0));
    REQUIRE(r3.feasible());
    CHECK(r3.report->eval.objective == Rational(23));
    CHECK(r3.report->schedule.start == std::vector<Time>{0, 4, 6});

    auto r_mu = solve_dp1(prepared_e1(10), 10, Rational(1));
    REQUIRE(r_mu.feasible());
    CHECK(r_mu.report->eval.objective == Rational(26));
    CHECK(r_mu.report->eval.dmax == 3);

    auto bad = solve_dp1(prepared_e1(2), 2, Rational(0));
    CHECK_FALSE(bad.feasible());
    CHECK(bad.infeasible_reason == "infeasible: T2 - S_j1 > k");
}

TEST_CASE("idle completions are exact and only endpoints matter")
{
    int triggered = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        const Rational mu = Rational(static_cast<std::int64_t>(seed % 4), 2);
        Instance inst = random_small(seed, 7, 7, 6, 30, mu);
        auto prep = wspt_sort(inst);
        if (classify(prep, inst.k).kind != ClassKind::Nontrivial)
            continue;
        walk_states(prep, inst.k, [&](const GuessContext& ctx, const Dp1State& s, const std::vector<Side>& sides) {
            if (s.j >= prep.n() || !idle_triggered(s, prep, ctx))
                return;
            ++triggered;
            CAPTURE(seed);
            const auto done = extend_idle_and_complete(s, prep, ctx, inst.k, inst.mu);
            std::optional<Rational> best_endpoint;
            for (const IdleCompletion& c : done) {
                const Schedule sched = build_schedule(prep, idle_placement(sides, c, prep.n()));
                const Evaluation ev = evaluate(sched, prep, inst.mu);
                CHECK(ev.Z == c.z);
                CHECK(ev.dmax == c.dmax);
                CHECK(c.dmax == prep.orig_C(s.j + 1) - (s.ell + prep.p(s.j + 1)) - c.idle);
                CHECK(validate_structure(sched, prep, inst.k).empty());
                if (!best_endpoint || c.objective < *best_endpoint)
                    best_endpoint = c.objective;
            }

            std::optional<Rational> best_any;
            for (Time idle = 1; s.ell + idle + prep.p(s.j + 1) <= prep.T1; ++idle) {
                auto sched = idle_schedule(prep, s, sides, idle);
                if (!sched || !check_feasibility(*sched, prep).empty())
                    continue;
                const Evaluation ev = evaluate(*sched, prep, inst.mu);
                if (ev.dmax > inst.k)
                    continue;
                if (!best_any || ev.objective < *best_any)
                    best_any = ev.objective;
            }
            REQUIRE(best_any.has_value() == best_endpoint.has_value());
            if (best_any)
                CHECK(*best_any == *best_endpoint);
        });
    }
    CHECK(triggered > 20);
}

TEST_CASE("solve_dp1 matches the oracle and respects the structure")
{
    for (std::uint64_t seed = 1000; seed < 1120; ++seed) {
        const Rational mu = seed % 3 == 0 ? Rational(0) : (seed % 3 == 1 ? Rational(1) : Rational(3, 2));
        Instance inst = random_small(seed, 7, 6, 6, 30, mu);
        auto prep = wspt_sort(inst);
        auto oracle = brute_force(prep, inst.k, inst.mu);
        auto dp = solve_dp1(prep, inst.k, inst.mu);
        CAPTURE(seed);
        REQUIRE(oracle.has_value() == dp.feasible());
        if (!oracle)
            continue;
        CHECK(dp.report->eval.objective == oracle->best.eval.objective);
        CHECK(validate_structure(dp.report->schedule, prep, inst.k).empty());
        CHECK(dp.report->eval == evaluate(dp.report->schedule, prep, inst.mu));
    }
}

}
