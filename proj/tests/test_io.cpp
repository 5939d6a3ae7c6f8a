#include "resched/dp1.hpp"
#include "resched/io.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace resched;
using namespace resched::testing;

TEST_SUITE("io") {

TEST_CASE("rational json forms")
{
    CHECK(rational_from_json(json{{"num", 3}, {"den", 2}}) == Rational(3, 2));
    CHECK(rational_from_json(json(4)) == Rational(4));
    CHECK(rational_from_json(json("0.5")) == Rational(1, 2));
    CHECK(rational_from_json(rational_to_json(Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("instance round trip")
{
    const Instance inst = e1(10, Rational(3, 2));
    const Instance back = instance_from_json(instance_to_json(inst));
    CHECK(back.T1 == inst.T1);
    CHECK(back.T2 == inst.T2);
    CHECK(back.k == inst.k);
    CHECK(back.mu == inst.mu);
    REQUIRE(back.jobs.size() == inst.jobs.size());
    for (std::size_t i = 0; i < inst.jobs.size(); ++i)
        CHECK(back.jobs[i] == inst.jobs[i]);

    json no_mu = instance_to_json(inst);
    no_mu.erase("mu");
    CHECK(instance_from_json(no_mu).mu == Rational(0));
    CHECK_THROWS(instance_from_json(json{{"jobs", json::array()}}));
}

TEST_CASE("report round trip")
{
    auto prep = prepared_e1(10, Rational(1));
    auto r = solve_dp1(prep, 10, Rational(1));
    REQUIRE(r.feasible());
    const json j = report_to_json(*r.report, prep);
    CHECK(j.at("algorithm") == "dp1");
    CHECK(j.at("Z") == r.report->eval.Z);
    const SolveReport back = report_from_json(j);
    CHECK(back.schedule == r.report->schedule);
    CHECK(back.eval == r.report->eval);
    CHECK(back.guess_a == r.report->guess_a);
    CHECK(schedule_from_json(j) == r.report->schedule);
    CHECK(schedule_from_json(schedule_to_json(r.report->schedule, prep)) == r.report->schedule);
}

TEST_CASE("result status")
{
    auto prep = prepared_e1(2);
    const json j = result_to_json(solve_dp1(prep, 2, Rational(0)), prep);
    CHECK(j.at("status") == "infeasible");
    CHECK(j.at("reason") == "infeasible: T2 - S_j1 > k");
}

TEST_CASE("generator is deterministic and non-trivial")
{
    GenSpec spec;
    spec.n = 6;
    spec.seed = 42;
    const Instance a = generate(spec);
    const Instance b = generate(spec);
    CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());
    CHECK(classify(wspt_sort(a), a.k).kind == ClassKind::Nontrivial);
    spec.seed = 43;
    CHECK(instance_to_json(generate(spec)).dump() != instance_to_json(a).dump());

    GenSpec back = genspec_from_json(genspec_to_json(spec));
    CHECK(instance_to_json(generate(back)).dump() == instance_to_json(generate(spec)).dump());

    spec.n = 0;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
    spec.n = 3;
    spec.p = {5, 2};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}

}
