#include "resched/generator.hpp"

#include "resched/io.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace resched {

namespace {

// Portable bounded draw; std::uniform_int_distribution differs across
// standard libraries and would break seed reproducibility.
std::int64_t draw(std::mt19937_64& rng, IntRange r)
{
    const std::uint64_t span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return r.lo + static_cast<std::int64_t>(x % span);
}

void check_range(IntRange r, std::int64_t min_lo, const char* what)
{
    if (r.lo < min_lo || r.hi < r.lo)
        throw std::invalid_argument(std::string("invalid ") + what + " range");
}

IntRange range_from_json(const nlohmann::json& j)
{
    return IntRange{j.at(0).get<std::int64_t>(), j.at(1).get<std::int64_t>()};
}

} // namespace

Instance generate(const GenSpec& spec)
{
    if (spec.n < 1)
        throw std::invalid_argument("n must be at least 1");
    check_range(spec.p, 1, "p");
    check_range(spec.w, 1, "w");
    check_range(spec.gap, 1, "gap");
    if (spec.k_abs)
        check_range(*spec.k_abs, 0, "k");
    if (spec.k_frac < Rational(0) || spec.mu < Rational(0))
        throw std::invalid_argument("k_frac and mu must be non-negative");
    if (spec.max_attempts < 1)
        throw std::invalid_argument("max_attempts must be positive");

    std::mt19937_64 rng(spec.seed);
    for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
        Instance inst;
        Time total = 0;
        for (int i = 0; i < spec.n; ++i) {
            Job job{draw(rng, spec.p), draw(rng, spec.w), static_cast<std::size_t>(i)};
            total += job.p;
            inst.jobs.push_back(job);
        }
        if (total < 2) {
            if (!spec.allow_trivial)
                continue;
            inst.T1 = 0;
        } else {
            inst.T1 = draw(rng, {1, total - 1});
        }
        inst.T2 = inst.T1 + draw(rng, spec.gap);
        inst.k = spec.k_abs ? draw(rng, *spec.k_abs) : (spec.k_frac * Rational(total)).floor();
        inst.mu = spec.mu;

        if (spec.allow_trivial)
            return inst;
        const PreparedInstance prep = wspt_sort(inst);
        if (classify(prep, inst.k).kind == ClassKind::Nontrivial)
            return inst;
    }
    throw std::runtime_error("no non-trivial instance after " + std::to_string(spec.max_attempts) + " draws");
}

nlohmann::json genspec_to_json(const GenSpec& spec)
{
    nlohmann::json j{{"n", spec.n},
                     {"p", {spec.p.lo, spec.p.hi}},
                     {"w", {spec.w.lo, spec.w.hi}},
                     {"gap", {spec.gap.lo, spec.gap.hi}},
                     {"k_frac", rational_to_json(spec.k_frac)},
                     {"mu", rational_to_json(spec.mu)},
                     {"seed", spec.seed},
                     {"allow_trivial", spec.allow_trivial},
                     {"max_attempts", spec.max_attempts}};
    if (spec.k_abs)
        j["k"] = {spec.k_abs->lo, spec.k_abs->hi};
    return j;
}

GenSpec genspec_from_json(const nlohmann::json& j)
{
    GenSpec s;
    s.n = j.value("n", s.n);
    if (j.contains("p")) s.p = range_from_json(j.at("p"));
    if (j.contains("w")) s.w = range_from_json(j.at("w"));
    if (j.contains("gap")) s.gap = range_from_json(j.at("gap"));
    if (j.contains("k")) s.k_abs = range_from_json(j.at("k"));
    if (j.contains("k_frac")) s.k_frac = rational_from_json(j.at("k_frac"));
    if (j.contains("mu")) s.mu = rational_from_json(j.at("mu"));
    s.seed = j.value("seed", s.seed);
    s.allow_trivial = j.value("allow_trivial", s.allow_trivial);
    s.max_attempts = j.value("max_attempts", s.max_attempts);
    return s;
}

} // namespace resched
