#include "resched/fptas.hpp"

#include "resched/log.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace resched {

namespace {

Time to_time(const mpz_class& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("grid boundary does not fit in 64 bits");
    return static_cast<Time>(v.get_si());
}

// Largest i with lower * ratio^i <= upper.
int log_floor(Time lower, Time upper, const Rational& ratio)
{
    mpz_class lhs = lower;
    mpz_class rhs = upper;
    int i = 0;
    while (true) {
        lhs *= ratio.num();
        rhs *= ratio.den();
        if (lhs > rhs)
            return i;
        ++i;
    }
}

} // namespace

std::vector<Time> geometric_floors(Time base, const Rational& ratio, Time limit)
{
    if (ratio <= Rational(1))
        throw std::invalid_argument("geometric ratio must exceed 1");
    if (base < 1)
        throw std::invalid_argument("geometric base must be positive");
    std::vector<Time> out;
    mpz_class num = base;
    mpz_class den = 1;
    const mpz_class rn = ratio.num();
    const mpz_class rd = ratio.den();
    while (true) {
        num *= rn;
        den *= rd;
        mpz_class q = num / den;
        Time t = to_time(q);
        out.push_back(t);
        if (t > limit)
            break;
    }
    return out;
}

GeometricGrid::GeometricGrid(Time lower, Time upper, const Rational& ratio, bool zero_cell)
    : lower_(lower), upper_(upper), zero_cell_(zero_cell)
{
    if (lower < 1 || upper < lower)
        throw std::invalid_argument("grid needs 1 <= lower <= upper");
    std::vector<Time> floors = geometric_floors(lower, ratio, upper);
    r_ = log_floor(lower, upper, ratio);
    auto cover = std::lower_bound(floors.begin(), floors.end(), upper);
    floors.erase(cover + 1, floors.end());
    thresholds_ = std::move(floors);
}

int GeometricGrid::index(Time value) const
{
    if (value == 0 && zero_cell_)
        return 0;
    if (value < lower_ || value > upper_)
        throw std::out_of_range("value " + std::to_string(value) + " outside grid [" + std::to_string(lower_) +
                                ", " + std::to_string(upper_) + "]");
    auto it = std::lower_bound(thresholds_.begin(), thresholds_.end(), value);
    return static_cast<int>(it - thresholds_.begin()) + 1;
}

int box_index(Time value, Time lower, const Rational& delta)
{
    if (value == 0)
        return 0;
    if (lower < 1 || value < lower)
        throw std::out_of_range("box_index needs value >= lower >= 1");
    if (delta <= Rational(1))
        throw std::invalid_argument("box ratio must exceed 1");
    // value <= lower * (n/d)^i  <=>  value * d^i <= lower * n^i
    mpz_class lhs = value;
    mpz_class rhs = lower;
    int i = 0;
    do {
        lhs *= delta.den();
        rhs *= delta.num();
        ++i;
    } while (lhs > rhs);
    return i;
}

Rational clamp_epsilon(const Rational& epsilon)
{
    if (epsilon <= Rational(0))
        throw std::invalid_argument("epsilon must be positive");
    return std::min(epsilon, Rational(1));
}

Rational box_ratio(const Rational& epsilon, int n)
{
    return Rational(1) + clamp_epsilon(epsilon) / Rational(2 * static_cast<std::int64_t>(n));
}

std::size_t BoxGrid::capacity() const
{
    return static_cast<std::size_t>(ell1.cells() + 1) * static_cast<std::size_t>(ell2.cells()) *
           static_cast<std::size_t>(z.cells());
}

BoxGrid make_box_grid(const PreparedInstance& prep, int a, const Rational& epsilon)
{
    const Rational delta = box_ratio(epsilon, prep.n());
    const Time seed_later = prep.T2 + prep.p(a);
    return BoxGrid{
        delta,
        GeometricGrid(prep.p_min, prep.T1, delta, true),
        GeometricGrid(seed_later, prep.T2 + prep.total_p, delta, false),
        GeometricGrid(prep.z_prefix(a - 1) + prep.w(a) * seed_later,
                      prep.z_prefix(prep.n()) + prep.total_w * prep.T2, delta, false),
    };
}

namespace {

std::optional<Dp2GuessResult> run_boxed(const PreparedInstance& prep, const BoxGrid& grid, int a, Time cap,
                                        const StateObserver& observer = {})
{
    const GuessContext ctx = make_guess_context(prep, a, cap);
    const BoxBinning binning(grid);
    return search_dp2_guess(prep, ctx, binning, observer);
}

} // namespace

std::optional<SolveReport> approx_a(const PreparedInstance& prep, Time k, const Rational& epsilon, int a,
                                    Dp2SearchStats* stats, const StateObserver& observer)
{
    if (classify(prep, k).kind != ClassKind::Nontrivial)
        throw std::invalid_argument("approx_a needs a non-trivial instance");
    const BoxGrid grid = make_box_grid(prep, a, epsilon);
    auto found = run_boxed(prep, grid, a, k, observer);
    if (!found)
        return std::nullopt;
    if (stats)
        *stats = found->stats;
    return make_report(prep, std::move(found->schedule), Rational(0), "fptas", a);
}

SolveResult approx_mu0(const PreparedInstance& prep, Time k, const Rational& epsilon)
{
    const Rational zero(0);
    if (auto early = resolve_non_trivial(prep, k, zero, "fptas"))
        return *early;
    std::optional<SolveReport> best;
    for (const auto& cand : candidate_first_later_jobs(prep, k)) {
        auto r = approx_a(prep, k, epsilon, cand.a);
        if (r && (!best || better_report(*r, *best)))
            best = std::move(r);
    }
    SolveResult result;
    result.report = std::move(best);
    if (!result.report)
        result.infeasible_reason = "infeasible: no guess admits a schedule";
    return result;
}

std::vector<Time> deviation_levels(Time delta_a, Time k, const Rational& epsilon)
{
    if (delta_a <= 0)
        throw std::logic_error("delta_a must be positive");
    if (delta_a > k)
        throw std::invalid_argument("delta_a exceeds the deviation cap");
    std::vector<Time> levels;
    for (Time v : geometric_floors(delta_a, Rational(1) + clamp_epsilon(epsilon), k)) {
        if (v > k)
            break;
        v = std::clamp(v, delta_a, k);
        if (levels.empty() || levels.back() != v)
            levels.push_back(v);
    }
    if (levels.empty() || levels.back() != k)
        levels.push_back(k);
    return levels;
}

SolveResult approx_general(const PreparedInstance& prep, Time k, const Rational& mu, const Rational& epsilon)
{
    if (auto early = resolve_non_trivial(prep, k, mu, "fptas"))
        return *early;
    const Rational eps = clamp_epsilon(epsilon);

    std::optional<SolveReport> best;
    for (const auto& cand : candidate_first_later_jobs(prep, k)) {
        const BoxGrid grid = make_box_grid(prep, cand.a, eps);
        const auto levels = deviation_levels(cand.delta_a, k, eps);
        for (Time level : levels) {
            auto found = run_boxed(prep, grid, cand.a, level);
            if (!found)
                continue;
            SolveReport r = make_report(prep, std::move(found->schedule), mu, "fptas", cand.a);
            if (r.eval.dmax > level)
                throw std::logic_error("approximate schedule exceeds its deviation level");
            if (!best || better_report(r, *best))
                best = std::move(r);
        }
        log_debug("fptas guess a={} levels={} cells=({}, {}, {})", cand.a, levels.size(), grid.ell1.cells(),
                  grid.ell2.cells(), grid.z.cells());
    }
    SolveResult result;
    result.report = std::move(best);
    if (!result.report)
        result.infeasible_reason = "infeasible: no guess admits a schedule";
    return result;
}

} // namespace resched
