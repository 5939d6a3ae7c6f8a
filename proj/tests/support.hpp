#pragma once

#include "resched/core.hpp"
#include "resched/generator.hpp"

#include <cstdint>
#include <initializer_list>
#include <utility>

namespace resched::testing {

inline Instance make_instance(std::initializer_list<std::pair<Time, Cost>> jobs, Time T1, Time T2, Time k,
                              Rational mu = Rational(0))
{
    Instance inst;
    std::size_t id = 0;
    for (auto [p, w] : jobs)
        inst.jobs.push_back(Job{p, w, id++});
    inst.T1 = T1;
    inst.T2 = T2;
    inst.k = k;
    inst.mu = mu;
    return inst;
}

/// The three-job worked instance: WSPT order (1,2), (2,2), (3,1), window [2, 4].
inline Instance e1(Time k, Rational mu = Rational(0))
{
    return make_instance({{1, 2}, {2, 2}, {3, 1}}, 2, 4, k, mu);
}

inline PreparedInstance prepared_e1(Time k, Rational mu = Rational(0))
{
    return wspt_sort(e1(k, mu));
}

inline Schedule starts(std::initializer_list<Time> s)
{
    return Schedule{std::vector<Time>(s)};
}

/// Small non-trivial random instance for property tests.
inline Instance random_small(std::uint64_t seed, int max_n, Time max_p, Cost max_w, Time max_k,
                             Rational mu = Rational(0))
{
    GenSpec spec;
    spec.n = 2 + static_cast<int>(seed % static_cast<std::uint64_t>(max_n - 1));
    spec.p = {1, max_p};
    spec.w = {1, max_w};
    spec.gap = {1, max_p + 2};
    spec.k_abs = IntRange{0, max_k};
    spec.mu = mu;
    spec.seed = seed;
    return generate(spec);
}

} // namespace resched::testing
