#pragma once

#include "resched/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace resched {

using Time = std::int64_t;
using Cost = std::int64_t;

struct Job {
    Time p = 1;
    Cost w = 1;
    std::size_t orig_id = 0;

    friend bool operator==(const Job&, const Job&) = default;
};

/// A single-machine rescheduling instance: jobs, the unavailability window
/// [T1, T2], the deviation cap k and the balancing factor mu.
struct Instance {
    std::vector<Job> jobs;
    Time T1 = 0;
    Time T2 = 1;
    Time k = 0;
    Rational mu;

    /// Throws std::invalid_argument when an instance invariant is broken.
    void validate() const;

    friend bool operator==(const Instance&, const Instance&) = default;
};

/// Jobs in WSPT order plus every derived quantity the solvers share.
///
/// Job positions are 1-based throughout (position 0 means "none"), matching
/// prefix sums where P(0) = 0. Immutable once built by wspt_sort().
struct PreparedInstance {
    std::vector<Job> jobs;
    Time T1 = 0;
    Time T2 = 1;
    Time k = 0;
    Rational mu;

    Time p_min = 0;
    Time p_max = 0;
    Time total_p = 0;
    Cost w_max = 0;
    Cost total_w = 0;

    std::optional<int> j1; // first job of pi* completing after T1
    std::optional<int> j2; // first job of pi* starting at or after T2
    int j3 = 0;            // last job that may sit before the window under cap k

    int n() const { return static_cast<int>(jobs.size()); }
    const Job& job(int pos) const { return jobs[static_cast<std::size_t>(pos - 1)]; }
    Time p(int pos) const { return job(pos).p; }
    Cost w(int pos) const { return job(pos).w; }

    Time prefix_p(int i) const { return prefix_p_[static_cast<std::size_t>(i)]; }
    Cost prefix_w(int i) const { return prefix_w_[static_cast<std::size_t>(i)]; }
    /// Weighted completion time of jobs 1..i run back to back from time 0.
    Cost z_prefix(int i) const { return z_prefix_[static_cast<std::size_t>(i)]; }

    Time orig_C(int pos) const { return prefix_p(pos); }
    Time orig_S(int pos) const { return prefix_p(pos - 1); }

    /// Weighted completion time of jobs first..last run back to back from 0.
    Cost block_completion(int first, int last) const;
    Cost weight_between(int first, int last) const { return prefix_w(last) - prefix_w(first - 1); }
    Time length_between(int first, int last) const { return prefix_p(last) - prefix_p(first - 1); }

    /// j3 for an arbitrary cap: the largest j with orig_C(j) - cap <= T1.
    int last_earlier_candidate(Time cap) const;

    friend PreparedInstance wspt_sort(const Instance& instance);

private:
    std::vector<Time> prefix_p_;
    std::vector<Cost> prefix_w_;
    std::vector<Cost> z_prefix_;
};

PreparedInstance wspt_sort(const Instance& instance);

/// Start times indexed by WSPT position: start[i] belongs to position i + 1.
struct Schedule {
    std::vector<Time> start;

    Time start_of(int pos) const { return start[static_cast<std::size_t>(pos - 1)]; }

    friend bool operator==(const Schedule&, const Schedule&) = default;
    friend auto operator<=>(const Schedule&, const Schedule&) = default;
};

enum class Side : std::uint8_t { Earlier, Later };

/// Which side of the window each job lands on, plus at most one idle gap in
/// the earlier part (gap_job is the first job after the gap, 0 for none).
/// Earlier jobs run contiguously from 0, later jobs contiguously from T2,
/// each side in WSPT order.
struct Placement {
    std::vector<Side> side;
    int gap_job = 0;
    Time gap_start = 0;
};

Schedule build_schedule(const PreparedInstance& prep, const Placement& placement);

/// The unmodified WSPT schedule.
Schedule original_schedule(const PreparedInstance& prep);

struct Evaluation {
    Cost Z = 0;
    std::vector<Time> dev;
    Time dmax = 0;
    Rational objective;

    friend bool operator==(const Evaluation&, const Evaluation&) = default;
};

enum class ViolationKind {
    NegativeStart,
    Overlap,
    Window,
    DeviationCap,
    EarlierOrder,
    LaterOrder,
    EarlierLate,
    MultipleGaps,
    GapDeviation,
    GapNotConsecutive,
    GapJobBeforeT2,
    LaterNotContiguous,
    LaterFirstNotMax,
    LaterFirstIndex,
};

struct Violation {
    ViolationKind kind;
    int job = 0;
    std::string message;
};

/// Non-overlap, non-negative starts and window avoidance only.
std::vector<Violation> check_feasibility(const Schedule& schedule, const PreparedInstance& prep);

/// Throws std::invalid_argument for an infeasible schedule.
Evaluation evaluate(const Schedule& schedule, const PreparedInstance& prep, const Rational& mu);

/// Feasibility, the deviation cap and the structural properties every
/// optimal-form schedule has: both sides in WSPT order, earlier jobs never
/// late, at most one earlier idle gap whose trailing run is consecutive,
/// starts at or after T2 in pi* and sits exactly dmax early, and a later
/// part packed from T2 whose first job has the largest later deviation and
/// index at most j1.
std::vector<Violation> validate_structure(const Schedule& schedule, const PreparedInstance& prep, Time k);

enum class ClassKind { Trivial, Infeasible, Nontrivial };

struct Classification {
    ClassKind kind = ClassKind::Nontrivial;
    std::optional<Schedule> schedule; // set for Trivial
    std::string reason;               // set for Trivial and Infeasible
};

Classification classify(const PreparedInstance& prep, Time k);

struct FirstLaterCandidate {
    int a = 0;
    Time delta_a = 0;
};

/// Jobs among 1..j1 that may start exactly at T2 without exceeding cap k.
std::vector<FirstLaterCandidate> candidate_first_later_jobs(const PreparedInstance& prep, Time k);

struct SolveReport {
    Schedule schedule;
    Evaluation eval;
    std::string algorithm;
    std::optional<int> guess_a;

    friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// Result of a top-level solve: either a report or the reason none exists.
struct SolveResult {
    std::optional<SolveReport> report;
    std::string infeasible_reason;

    bool feasible() const { return report.has_value(); }
};

SolveReport make_report(const PreparedInstance& prep, Schedule schedule, const Rational& mu,
                        std::string algorithm, std::optional<int> guess_a);

/// Deterministic preference: objective, then dmax, then lexicographic starts.
bool better_report(const SolveReport& lhs, const SolveReport& rhs);

/// Handles the Trivial and Infeasible classifications that every solver
/// shares; returns nullopt for Nontrivial instances.
std::optional<SolveResult> resolve_non_trivial(const PreparedInstance& prep, Time k, const Rational& mu,
                                               const std::string& algorithm);

} // namespace resched
