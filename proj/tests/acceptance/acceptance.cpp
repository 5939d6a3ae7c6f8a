// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "resched/dp1.hpp"
#include "resched/dp2.hpp"
#include "resched/fptas.hpp"
#include "resched/generator.hpp"
#include "resched/io.hpp"
#include "resched/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace resched;

namespace {

struct Emitted {
    std::string source;
    PreparedInstance prep;
    Time k;
    Schedule schedule;
    bool from_dp2;
};

std::vector<Emitted> g_emitted;

struct Outcome {
    bool pass = true;
    std::string detail;
    int checked = 0;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

Instance draw(std::uint64_t seed, int n_lo, int n_hi, IntRange p, IntRange w, std::optional<IntRange> k, Rational mu)
{
    GenSpec spec;
    spec.n = n_lo + static_cast<int>(seed % static_cast<std::uint64_t>(n_hi - n_lo + 1));
    spec.p = p;
    spec.w = w;
    spec.gap = {1, p.hi + 2};
    spec.k_abs = k;
    spec.mu = mu;
    spec.seed = seed;
    return generate(spec);
}

Rational mu_for(std::uint64_t i)
{
    static const Rational options[] = {Rational(0), Rational(1), Rational(3, 2)};
    return options[i % 3];
}

void keep(const std::string& source, const PreparedInstance& prep, Time k, const SolveResult& r, bool from_dp2 = false)
{
    if (r.report)
        g_emitted.push_back({source, prep, k, r.report->schedule, from_dp2});
}

std::string seed_note(std::uint64_t seed) { return "seed " + std::to_string(seed); }

Outcome oracle_equivalence()
{
    Outcome o;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::uint64_t seed = 10000 + i;
        const Instance inst = draw(seed, 2, 7, {1, 6}, {1, 6}, IntRange{0, 30}, mu_for(i));
        const PreparedInstance prep = wspt_sort(inst);
        const auto oracle = brute_force(prep, inst.k, inst.mu);
        const SolveResult dp = solve_dp1(prep, inst.k, inst.mu);
        keep("dp1", prep, inst.k, dp);
        ++o.checked;
        if (oracle.has_value() != dp.feasible()) {
            o.fail(seed_note(seed) + ": feasibility differs");
        } else if (oracle && oracle->best.eval.objective != dp.report->eval.objective) {
            o.fail(seed_note(seed) + ": dp1 " + dp.report->eval.objective.to_string() + " vs oracle " +
                   oracle->best.eval.objective.to_string());
        }
    }
    return o;
}

Outcome cross_solver()
{
    Outcome o;
    for (std::uint64_t i = 0; i < 200; ++i) {
        const std::uint64_t seed = 20000 + i;
        // Tight caps on odd draws make idle before the window worthwhile.
        const IntRange caps = i % 2 ? IntRange{0, 12} : IntRange{0, 40};
        const Instance inst = draw(seed, 2, 12, {1, 10}, {1, 10}, caps, Rational(0));
        const PreparedInstance prep = wspt_sort(inst);
        const SolveResult d1 = solve_dp1(prep, inst.k, inst.mu);
        const SolveResult d2 = solve_dp2(prep, inst.k);
        keep("dp1", prep, inst.k, d1);
        keep("dp2", prep, inst.k, d2, true);
        ++o.checked;
        if (d1.feasible() != d2.feasible())
            o.fail(seed_note(seed) + ": feasibility differs");
        else if (d1.feasible() && Rational(d2.report->eval.Z) != d1.report->eval.objective)
            o.fail(seed_note(seed) + ": dp2 Z " + std::to_string(d2.report->eval.Z) + " vs dp1 " +
                   d1.report->eval.objective.to_string());
    }
    return o;
}

Outcome fptas_ratio()
{
    Outcome o;
    const Rational epsilons[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(1)};
    for (std::uint64_t i = 0; i < 100; ++i) {
        const std::uint64_t seed = 30000 + i;
        const Instance inst = draw(seed, 2, 12, {1, 10}, {1, 10}, IntRange{0, 40}, mu_for(i));
        const PreparedInstance prep = wspt_sort(inst);
        const SolveResult exact = solve_dp1(prep, inst.k, inst.mu);
        for (const Rational& eps : epsilons) {
            const SolveResult approx = approx_general(prep, inst.k, inst.mu, eps);
            keep("fptas", prep, inst.k, approx);
            ++o.checked;
            if (approx.feasible() != exact.feasible()) {
                o.fail(seed_note(seed) + ": feasibility differs");
                continue;
            }
            if (!exact.feasible())
                continue;
            const Rational bound = (Rational(1) + eps) * exact.report->eval.objective;
            if (approx.report->eval.objective > bound)
                o.fail(seed_note(seed) + " eps " + eps.to_string() + ": " +
                       approx.report->eval.objective.to_string() + " > " + bound.to_string());
        }
    }
    return o;
}

// Idle before T1 means the jobs finishing by T1 do not form one block from 0.
bool has_earlier_gap(const Schedule& s, const PreparedInstance& prep)
{
    Time packed = 0;
    Time last_end = 0;
    for (int pos = 1; pos <= prep.n(); ++pos) {
        const Time c = s.start_of(pos) + prep.p(pos);
        if (c <= prep.T1) {
            packed += prep.p(pos);
            last_end = std::max(last_end, c);
        }
    }
    return last_end > packed;
}

Outcome structure()
{
    Outcome o;
    int gaps = 0;
    for (const Emitted& e : g_emitted) {
        ++o.checked;
        const auto violations = validate_structure(e.schedule, e.prep, e.k);
        if (!violations.empty()) {
            o.fail(e.source + ": " + violations.front().message);
            continue;
        }
        const Evaluation ev = evaluate(e.schedule, e.prep, Rational(0));
        if (ev.dmax > e.k)
            o.fail(e.source + ": dmax above cap");
        if (e.from_dp2 && has_earlier_gap(e.schedule, e.prep)) {
            ++gaps;
            if (ev.dmax != e.k)
                o.fail("dp2 schedule with idle has dmax " + std::to_string(ev.dmax) + " != k " + std::to_string(e.k));
        }
    }
    o.detail = o.pass ? std::to_string(gaps) + " dp2 schedules with idle" : o.detail;
    return o;
}

Outcome monotonicity()
{
    Outcome o;
    for (std::uint64_t i = 0; i < 20; ++i) {
        const std::uint64_t seed = 50000 + i;
        Instance inst = draw(seed, 4, 10, {1, 10}, {1, 10}, std::nullopt, Rational(1));
        const PreparedInstance prep = wspt_sort(inst);
        const Time k0 = prep.T2 - prep.orig_S(*prep.j1);

        std::optional<Rational> prev;
        for (Time k = k0; k <= k0 + 10; ++k) {
            const SolveResult r = solve_dp1(prep, k, inst.mu);
            ++o.checked;
            if (!r.feasible()) {
                o.fail(seed_note(seed) + ": infeasible at k=" + std::to_string(k));
                break;
            }
            if (prev && r.report->eval.objective > *prev)
                o.fail(seed_note(seed) + ": objective rises at k=" + std::to_string(k));
            prev = r.report->eval.objective;
        }

        prev.reset();
        for (int mu = 0; mu <= 2; ++mu) {
            const SolveResult r = solve_dp1(prep, inst.k, Rational(mu));
            ++o.checked;
            if (!r.feasible()) {
                o.fail(seed_note(seed) + ": infeasible at mu=" + std::to_string(mu));
                break;
            }
            if (prev && r.report->eval.objective < *prev)
                o.fail(seed_note(seed) + ": objective falls at mu=" + std::to_string(mu));
            prev = r.report->eval.objective;
        }
    }
    return o;
}

Outcome goldens()
{
    Outcome o;
    Instance e1;
    e1.jobs = {{1, 2, 0}, {2, 2, 1}, {3, 1, 2}};
    e1.T1 = 2;
    e1.T2 = 4;
    struct Golden {
        Time k;
        Rational mu;
        Rational expected;
    };
    for (const Golden& g : {Golden{10, Rational(0), Rational(22)}, Golden{3, Rational(0), Rational(23)},
                            Golden{10, Rational(1), Rational(26)}}) {
        e1.k = g.k;
        e1.mu = g.mu;
        const PreparedInstance prep = wspt_sort(e1);
        const std::string tag = "k=" + std::to_string(g.k) + " mu=" + g.mu.to_string();
        const auto oracle = brute_force(prep, g.k, g.mu);
        const SolveResult d1 = solve_dp1(prep, g.k, g.mu);
        o.checked += 2;
        if (!oracle || oracle->best.eval.objective != g.expected)
            o.fail(tag + ": oracle disagrees with golden");
        if (!d1.feasible() || d1.report->eval.objective != g.expected)
            o.fail(tag + ": dp1 disagrees with golden");
        if (g.mu == Rational(0)) {
            const SolveResult d2 = solve_dp2(prep, g.k);
            ++o.checked;
            if (!d2.feasible() || Rational(d2.report->eval.Z) != g.expected)
                o.fail(tag + ": dp2 disagrees with golden");
        }
    }
    return o;
}

Outcome determinism()
{
    Outcome o;
    using Run = std::function<SolveResult(const PreparedInstance&, const Instance&)>;
    const std::vector<std::pair<std::string, Run>> solvers = {
        {"dp1", [](const PreparedInstance& p, const Instance& i) { return solve_dp1(p, i.k, i.mu); }},
        {"dp2", [](const PreparedInstance& p, const Instance& i) { return solve_dp2(p, i.k); }},
        {"fptas", [](const PreparedInstance& p, const Instance& i) {
             return approx_general(p, i.k, i.mu, Rational(1, 4));
         }},
        {"oracle", [](const PreparedInstance& p, const Instance& i) {
             SolveResult r;
             if (auto b = brute_force(p, i.k, i.mu))
                 r.report = b->best;
             return r;
         }},
    };
    for (std::uint64_t i = 0; i < 25; ++i) {
        const std::uint64_t seed = 70000 + i;
        const Instance a = draw(seed, 2, 7, {1, 6}, {1, 6}, IntRange{0, 30}, i % 2 ? Rational(0) : Rational(3, 2));
        const Instance b = draw(seed, 2, 7, {1, 6}, {1, 6}, IntRange{0, 30}, i % 2 ? Rational(0) : Rational(3, 2));
        ++o.checked;
        if (instance_to_json(a).dump() != instance_to_json(b).dump())
            o.fail(seed_note(seed) + ": generator not deterministic");
        for (const auto& [name, run] : solvers) {
            if (name == "dp2" && a.mu != Rational(0))
                continue;
            const PreparedInstance pa = wspt_sort(a);
            const PreparedInstance pb = wspt_sort(b);
            ++o.checked;
            if (result_to_json(run(pa, a), pa).dump(2) != result_to_json(run(pb, b), pb).dump(2))
                o.fail(seed_note(seed) + ": " + name + " report differs between runs");
        }
    }
    return o;
}

Outcome runtime_smoke()
{
    Outcome o;
    double worst = 0;
    int done = 0;
    for (std::uint64_t seed = 80000; done < 5 && seed < 81000; ++seed) {
        GenSpec spec;
        spec.n = 20;
        spec.p = {1, 5};
        spec.w = {1, 10};
        spec.gap = {1, 10};
        spec.seed = seed;
        spec.allow_trivial = true;
        Instance inst = generate(spec);
        inst.T1 = std::min<Time>(inst.T1, 50);
        inst.T2 = inst.T1 + 1 + static_cast<Time>(seed % 10);
        inst.k = 100;
        inst.mu = Rational(1);
        const PreparedInstance prep = wspt_sort(inst);
        if (classify(prep, inst.k).kind != ClassKind::Nontrivial)
            continue;
        ++done;
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult r = solve_dp1(prep, inst.k, inst.mu);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        worst = std::max(worst, secs);
        ++o.checked;
        if (!r.feasible())
            o.fail(seed_note(seed) + ": dp1 found no schedule");
        if (secs >= 60.0)
            o.fail(seed_note(seed) + ": dp1 took " + std::to_string(secs) + " s");
    }
    if (done < 5)
        o.fail("could not draw five non-trivial instances");
    if (o.pass) {
        std::ostringstream s;
        s.precision(3);
        s << "slowest " << worst << " s";
        o.detail = s.str();
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"1 oracle equivalence (dp1 == brute force)", oracle_equivalence},
        {"2 cross-solver agreement (dp2 == dp1, mu = 0)", cross_solver},
        {"3 fptas ratio <= 1 + eps", fptas_ratio},
        {"4 structural invariants of emitted schedules", structure},
        {"5 monotone in k and mu", monotonicity},
        {"6 worked-instance goldens", goldens},
        {"7 determinism", determinism},
        {"8 dp1 runtime smoke (n = 20)", runtime_smoke},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %s: %d checks, %.2f s%s%s\n", o.pass ? "PASS" : "FAIL", c.name, o.checked, secs,
                    o.detail.empty() ? "" : ", ", o.detail.c_str());
        if (!o.pass)
            ++failed;
    }
    return failed == 0 ? 0 : 1;
}
