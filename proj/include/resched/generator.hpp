#pragma once

#include "resched/core.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>

namespace resched {

struct IntRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

/// Random instance recipe. T1 is drawn from [1, P - 1], T2 - T1 from `gap`.
/// The cap comes from `k_abs` when set, else floor(k_frac * P). Draws that
/// classify as trivial or infeasible are redrawn unless allow_trivial is set.
struct GenSpec {
    int n = 5;
    IntRange p{1, 10};
    IntRange w{1, 10};
    IntRange gap{1, 10};
    std::optional<IntRange> k_abs;
    Rational k_frac{1};
    Rational mu{0};
    std::uint64_t seed = 0;
    bool allow_trivial = false;
    int max_attempts = 10000;
};

/// Throws std::invalid_argument for an unusable spec and std::runtime_error
/// when max_attempts draws never produce a non-trivial instance.
Instance generate(const GenSpec& spec);

nlohmann::json genspec_to_json(const GenSpec& spec);
GenSpec genspec_from_json(const nlohmann::json& j);

} // namespace resched
