#include "resched/core.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace resched {

void Instance::validate() const
{
    if (jobs.empty())
        throw std::invalid_argument("instance has no jobs");
    for (const Job& j : jobs) {
        if (j.p < 1)
            throw std::invalid_argument("processing time must be >= 1");
        if (j.w < 1)
            throw std::invalid_argument("weight must be >= 1");
    }
    if (T1 < 0 || T2 <= T1)
        throw std::invalid_argument("window must satisfy 0 <= T1 < T2");
    if (k < 0)
        throw std::invalid_argument("deviation cap must be >= 0");
    if (mu < Rational(0))
        throw std::invalid_argument("mu must be >= 0");
}

PreparedInstance wspt_sort(const Instance& instance)
{
    instance.validate();

    PreparedInstance prep;
    prep.jobs = instance.jobs;
    for (std::size_t i = 0; i < prep.jobs.size(); ++i)
        prep.jobs[i].orig_id = i;
    std::stable_sort(prep.jobs.begin(), prep.jobs.end(), [](const Job& a, const Job& b) {
        return static_cast<__int128>(a.p) * b.w < static_cast<__int128>(b.p) * a.w;
    });

    prep.T1 = instance.T1;
    prep.T2 = instance.T2;
    prep.k = instance.k;
    prep.mu = instance.mu;

    const int n = prep.n();
    prep.prefix_p_.assign(static_cast<std::size_t>(n) + 1, 0);
    prep.prefix_w_.assign(static_cast<std::size_t>(n) + 1, 0);
    prep.z_prefix_.assign(static_cast<std::size_t>(n) + 1, 0);
    prep.p_min = prep.jobs.front().p;
    for (int i = 1; i <= n; ++i) {
        const Job& j = prep.job(i);
        prep.prefix_p_[i] = prep.prefix_p_[i - 1] + j.p;
        prep.prefix_w_[i] = prep.prefix_w_[i - 1] + j.w;
        prep.z_prefix_[i] = prep.z_prefix_[i - 1] + j.w * prep.prefix_p_[i];
        prep.p_min = std::min(prep.p_min, j.p);
        prep.p_max = std::max(prep.p_max, j.p);
        prep.w_max = std::max(prep.w_max, j.w);
    }
    prep.total_p = prep.prefix_p(n);
    prep.total_w = prep.prefix_w(n);

    for (int i = 1; i <= n; ++i) {
        if (!prep.j1 && prep.orig_C(i) > prep.T1)
            prep.j1 = i;
        if (!prep.j2 && prep.orig_S(i) >= prep.T2)
            prep.j2 = i;
    }
    prep.j3 = prep.last_earlier_candidate(prep.k);
    return prep;
}

Cost PreparedInstance::block_completion(int first, int last) const
{
    if (first > last)
        return 0;
    // sum_{m=first}^{last} w_m (P_m - P_{first-1})
    return (z_prefix(last) - z_prefix(first - 1)) - prefix_p(first - 1) * weight_between(first, last);
}

int PreparedInstance::last_earlier_candidate(Time cap) const
{
    int j3 = 0;
    for (int i = 1; i <= n(); ++i)
        if (orig_C(i) - cap <= T1)
            j3 = i;
    return j3;
}

Schedule build_schedule(const PreparedInstance& prep, const Placement& placement)
{
    const int n = prep.n();
    if (static_cast<int>(placement.side.size()) != n)
        throw std::invalid_argument("placement size does not match instance");

    Schedule s;
    s.start.assign(static_cast<std::size_t>(n), 0);
    Time early = 0;
    Time late = prep.T2;
    for (int pos = 1; pos <= n; ++pos) {
        if (placement.side[pos - 1] == Side::Earlier) {
            if (pos == placement.gap_job) {
                if (placement.gap_start < early)
                    throw std::logic_error("idle gap ends before the preceding job completes");
                early = placement.gap_start;
            }
            s.start[pos - 1] = early;
            early += prep.p(pos);
        } else {
            s.start[pos - 1] = late;
            late += prep.p(pos);
        }
    }
    return s;
}

Schedule original_schedule(const PreparedInstance& prep)
{
    Schedule s;
    s.start.reserve(prep.jobs.size());
    for (int pos = 1; pos <= prep.n(); ++pos)
        s.start.push_back(prep.orig_S(pos));
    return s;
}

namespace {

std::string job_name(int pos)
{
    return "J" + std::to_string(pos);
}

std::vector<int> order_by_start(const Schedule& schedule, const std::vector<int>& positions)
{
    std::vector<int> out = positions;
    std::stable_sort(out.begin(), out.end(),
                     [&](int a, int b) { return schedule.start_of(a) < schedule.start_of(b); });
    return out;
}

} // namespace

std::vector<Violation> check_feasibility(const Schedule& schedule, const PreparedInstance& prep)
{
    std::vector<Violation> out;
    const int n = prep.n();
    if (static_cast<int>(schedule.start.size()) != n) {
        out.push_back({ViolationKind::Overlap, 0,
                       "schedule has " + std::to_string(schedule.start.size()) + " starts for " +
                           std::to_string(n) + " jobs"});
        return out;
    }

    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    for (int pos : all) {
        Time s = schedule.start_of(pos);
        Time c = s + prep.p(pos);
        if (s < 0)
            out.push_back({ViolationKind::NegativeStart, pos, "negative start: " + job_name(pos)});
        if (c > prep.T1 && s < prep.T2)
            out.push_back({ViolationKind::Window, pos,
                           "window violation: " + job_name(pos) + " runs inside (T1, T2)"});
    }
    std::vector<int> by_start = order_by_start(schedule, all);
    for (std::size_t i = 1; i < by_start.size(); ++i) {
        int prev = by_start[i - 1];
        int cur = by_start[i];
        if (schedule.start_of(prev) + prep.p(prev) > schedule.start_of(cur))
            out.push_back({ViolationKind::Overlap, cur,
                           "overlap: " + job_name(prev) + " and " + job_name(cur)});
    }
    return out;
}

Evaluation evaluate(const Schedule& schedule, const PreparedInstance& prep, const Rational& mu)
{
    auto infeasible = check_feasibility(schedule, prep);
    if (!infeasible.empty())
        throw std::invalid_argument(infeasible.front().message);

    Evaluation ev;
    ev.dev.reserve(prep.jobs.size());
    for (int pos = 1; pos <= prep.n(); ++pos) {
        Time c = schedule.start_of(pos) + prep.p(pos);
        ev.Z += prep.w(pos) * c;
        Time d = c - prep.orig_C(pos);
        if (d < 0) d = -d;
        ev.dev.push_back(d);
        ev.dmax = std::max(ev.dmax, d);
    }
    ev.objective = mu * Rational(ev.dmax) + Rational(ev.Z);
    return ev;
}

std::vector<Violation> validate_structure(const Schedule& schedule, const PreparedInstance& prep, Time k)
{
    std::vector<Violation> out = check_feasibility(schedule, prep);
    if (!out.empty())
        return out;

    const Evaluation ev = evaluate(schedule, prep, Rational(0));
    if (ev.dmax > k)
        out.push_back({ViolationKind::DeviationCap, 0,
                       "deviation cap exceeded: dmax " + std::to_string(ev.dmax) + " > k " + std::to_string(k)});

    std::vector<int> earlier, later;
    for (int pos = 1; pos <= prep.n(); ++pos) {
        if (schedule.start_of(pos) + prep.p(pos) <= prep.T1)
            earlier.push_back(pos);
        else
            later.push_back(pos);
    }
    earlier = order_by_start(schedule, earlier);
    later = order_by_start(schedule, later);

    auto completion = [&](int pos) { return schedule.start_of(pos) + prep.p(pos); };

    for (std::size_t i = 1; i < earlier.size(); ++i)
        if (earlier[i] < earlier[i - 1])
            out.push_back({ViolationKind::EarlierOrder, earlier[i],
                           "earlier part not in WSPT order at " + job_name(earlier[i])});
    for (std::size_t i = 1; i < later.size(); ++i)
        if (later[i] < later[i - 1])
            out.push_back({ViolationKind::LaterOrder, later[i],
                           "later part not in WSPT order at " + job_name(later[i])});

    for (int pos : earlier)
        if (completion(pos) > prep.orig_C(pos))
            out.push_back({ViolationKind::EarlierLate, pos,
                           "earlier job completes after its original time: " + job_name(pos)});

    std::vector<std::size_t> gaps;
    Time free_at = 0;
    for (std::size_t i = 0; i < earlier.size(); ++i) {
        if (schedule.start_of(earlier[i]) > free_at)
            gaps.push_back(i);
        free_at = completion(earlier[i]);
    }
    if (gaps.size() > 1)
        out.push_back({ViolationKind::MultipleGaps, earlier[gaps[1]],
                       "more than one idle period before T1"});
    if (!gaps.empty()) {
        const std::size_t g = gaps.front();
        const int first = earlier[g];
        if (prep.orig_S(first) < prep.T2)
            out.push_back({ViolationKind::GapJobBeforeT2, first,
                           "job after idle period starts before T2 in the original schedule: " + job_name(first)});
        for (std::size_t i = g; i < earlier.size(); ++i) {
            int pos = earlier[i];
            if (prep.orig_C(pos) - completion(pos) != ev.dmax)
                out.push_back({ViolationKind::GapDeviation, pos,
                               "job after idle period is not exactly dmax early: " + job_name(pos)});
            if (i > g && pos != earlier[i - 1] + 1)
                out.push_back({ViolationKind::GapNotConsecutive, pos,
                               "jobs after idle period are not consecutive: " + job_name(pos)});
        }
    }

    if (!later.empty()) {
        Time expect = prep.T2;
        for (int pos : later) {
            if (schedule.start_of(pos) != expect) {
                out.push_back({ViolationKind::LaterNotContiguous, pos,
                               "later part not packed from T2 at " + job_name(pos)});
                break;
            }
            expect += prep.p(pos);
        }
        const int head = later.front();
        for (int pos : later)
            if (ev.dev[pos - 1] > ev.dev[head - 1]) {
                out.push_back({ViolationKind::LaterFirstNotMax, pos,
                               "first later job does not have the largest later deviation"});
                break;
            }
        if (!prep.j1 || head > *prep.j1)
            out.push_back({ViolationKind::LaterFirstIndex, head,
                           "first later job " + job_name(head) + " comes after j1"});
    }
    return out;
}

Classification classify(const PreparedInstance& prep, Time k)
{
    Classification c;
    if (prep.T1 >= prep.total_p) {
        c.kind = ClassKind::Trivial;
        c.schedule = original_schedule(prep);
        c.reason = "T1 >= P: original schedule unaffected";
        return c;
    }
    if (prep.T1 < prep.p_min) {
        // Every job completes T2 units late when pi* is shifted to T2.
        if (prep.T2 > k) {
            c.kind = ClassKind::Infeasible;
            c.reason = "infeasible: T1 < p_min and T2 > k";
            return c;
        }
        Schedule s = original_schedule(prep);
        for (Time& t : s.start) t += prep.T2;
        c.kind = ClassKind::Trivial;
        c.schedule = std::move(s);
        c.reason = "T1 < p_min: original schedule shifted to T2";
        return c;
    }
    if (prep.T2 - prep.orig_S(*prep.j1) > k) {
        c.kind = ClassKind::Infeasible;
        c.reason = "infeasible: T2 - S_j1 > k";
        return c;
    }
    c.kind = ClassKind::Nontrivial;
    return c;
}

std::vector<FirstLaterCandidate> candidate_first_later_jobs(const PreparedInstance& prep, Time k)
{
    std::vector<FirstLaterCandidate> out;
    if (!prep.j1)
        return out;
    for (int a = 1; a <= *prep.j1; ++a) {
        Time delta = prep.T2 - prep.orig_S(a);
        if (delta <= k)
            out.push_back({a, delta});
    }
    return out;
}

SolveReport make_report(const PreparedInstance& prep, Schedule schedule, const Rational& mu,
                        std::string algorithm, std::optional<int> guess_a)
{
    SolveReport r;
    r.eval = evaluate(schedule, prep, mu);
    r.schedule = std::move(schedule);
    r.algorithm = std::move(algorithm);
    r.guess_a = guess_a;
    return r;
}

bool better_report(const SolveReport& lhs, const SolveReport& rhs)
{
    if (lhs.eval.objective != rhs.eval.objective)
        return lhs.eval.objective < rhs.eval.objective;
    if (lhs.eval.dmax != rhs.eval.dmax)
        return lhs.eval.dmax < rhs.eval.dmax;
    return lhs.schedule.start < rhs.schedule.start;
}

std::optional<SolveResult> resolve_non_trivial(const PreparedInstance& prep, Time k, const Rational& mu,
                                               const std::string& algorithm)
{
    Classification c = classify(prep, k);
    if (c.kind == ClassKind::Nontrivial)
        return std::nullopt;
    SolveResult result;
    if (c.kind == ClassKind::Infeasible) {
        result.infeasible_reason = c.reason;
        return result;
    }
    result.report = make_report(prep, std::move(*c.schedule), mu, algorithm, std::nullopt);
    return result;
}

} // namespace resched
