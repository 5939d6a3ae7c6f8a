#pragma once

#include "resched/core.hpp"
#include "resched/dp2.hpp"
#include "resched/guess.hpp"

#include <optional>
#include <vector>

namespace resched {

/// Cells (lower * ratio^(i-1), lower * ratio^i] over integers in
/// [lower, upper], the first cell closed at `lower`. Cell 0 holds the value
/// 0 when `zero_cell` is set. Boundaries are exact: the grid caches
/// floor(lower * ratio^i), which decides membership of an integer exactly.
class GeometricGrid {
public:
    GeometricGrid(Time lower, Time upper, const Rational& ratio, bool zero_cell);

    /// Throws std::out_of_range outside [lower, upper] (and not the zero cell).
    int index(Time value) const;

    /// Number of positive cells that [lower, upper] spans.
    int cells() const { return static_cast<int>(thresholds_.size()); }
    /// floor(log_ratio(upper / lower)).
    int r() const { return r_; }
    Time lower() const { return lower_; }
    Time upper() const { return upper_; }
    const std::vector<Time>& thresholds() const { return thresholds_; }

private:
    Time lower_;
    Time upper_;
    bool zero_cell_;
    int r_ = 0;
    std::vector<Time> thresholds_;
};

/// floor(base * ratio^i) for i = 1, 2, ... up to and including the first
/// value above `limit`. ratio must exceed 1.
std::vector<Time> geometric_floors(Time base, const Rational& ratio, Time limit);

/// Smallest i >= 1 with value <= lower * delta^i, by repeated exact
/// multiplication; 0 for value 0.
int box_index(Time value, Time lower, const Rational& delta);

/// epsilon outside (0, 1] is clamped to 1 above and rejected at or below 0.
Rational clamp_epsilon(const Rational& epsilon);

/// delta = 1 + epsilon / (2n).
Rational box_ratio(const Rational& epsilon, int n);

/// The three grids for guess `a`: ell1 over [p_min, T1] plus a zero cell,
/// ell2 over [T2 + p_a, T2 + P], Z over [Z(J_1) + w_a(T2 + p_a), Z(J) + W T2].
struct BoxGrid {
    Rational delta;
    GeometricGrid ell1;
    GeometricGrid ell2;
    GeometricGrid z;

    StateKey box(const Dp2State& s) const { return {ell1.index(s.ell1), ell2.index(s.ell2), z.index(s.z)}; }
    /// Upper bound on the boxes a single stage can occupy.
    std::size_t capacity() const;
};

BoxGrid make_box_grid(const PreparedInstance& prep, int a, const Rational& epsilon);

/// One state per box; a collision keeps the smaller ell1.
class BoxBinning final : public StateBinning {
public:
    explicit BoxBinning(const BoxGrid& grid) : grid_(grid) {}
    StateKey key(const Dp2State& s) const override { return grid_.box(s); }
    bool replaces(const Dp2State& incoming, const Dp2State& stored) const override
    {
        return incoming.ell1 < stored.ell1;
    }

private:
    const BoxGrid& grid_;
};

/// Sparsified mu = 0 search with J_a fixed at T2; total weighted completion
/// within (1 + epsilon) of the best such schedule under cap k.
std::optional<SolveReport> approx_a(const PreparedInstance& prep, Time k, const Rational& epsilon, int a,
                                    Dp2SearchStats* stats = nullptr, const StateObserver& observer = {});

SolveResult approx_mu0(const PreparedInstance& prep, Time k, const Rational& epsilon);

/// Caps floor(delta_a (1 + epsilon)^i) for every i with delta_a (1 + epsilon)^i <= k,
/// then k itself; deduplicated and increasing.
std::vector<Time> deviation_levels(Time delta_a, Time k, const Rational& epsilon);

/// mu * dmax + Z within (1 + epsilon) of optimal.
SolveResult approx_general(const PreparedInstance& prep, Time k, const Rational& mu, const Rational& epsilon);

} // namespace resched
