#include "resched/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace resched {

json rational_to_json(const Rational& r)
{
    return json{{"num", r.num()}, {"den", r.den()}};
}

Rational rational_from_json(const json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<std::int64_t>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

json instance_to_json(const Instance& instance)
{
    json jobs = json::array();
    for (const Job& job : instance.jobs)
        jobs.push_back({{"p", job.p}, {"w", job.w}});
    return json{{"jobs", std::move(jobs)},
                {"T1", instance.T1},
                {"T2", instance.T2},
                {"k", instance.k},
                {"mu", rational_to_json(instance.mu)}};
}

Instance instance_from_json(const json& j)
{
    Instance inst;
    std::size_t id = 0;
    for (const json& job : j.at("jobs"))
        inst.jobs.push_back(Job{job.at("p").get<Time>(), job.at("w").get<Cost>(), id++});
    inst.T1 = j.at("T1").get<Time>();
    inst.T2 = j.at("T2").get<Time>();
    inst.k = j.at("k").get<Time>();
    inst.mu = j.contains("mu") ? rational_from_json(j.at("mu")) : Rational(0);
    inst.validate();
    return inst;
}

json schedule_to_json(const Schedule& schedule, const PreparedInstance& prep)
{
    json ids = json::array();
    for (const Job& job : prep.jobs)
        ids.push_back(job.orig_id);
    return json{{"starts", schedule.start}, {"orig_ids", std::move(ids)}};
}

Schedule schedule_from_json(const json& j)
{
    const json& s = j.contains("schedule") ? j.at("schedule") : j;
    return Schedule{s.at("starts").get<std::vector<Time>>()};
}

json report_to_json(const SolveReport& report, const PreparedInstance& prep)
{
    return json{{"algorithm", report.algorithm},
                {"guess_a", report.guess_a ? json(*report.guess_a) : json(nullptr)},
                {"objective", rational_to_json(report.eval.objective)},
                {"Z", report.eval.Z},
                {"dmax", report.eval.dmax},
                {"deviations", report.eval.dev},
                {"schedule", schedule_to_json(report.schedule, prep)}};
}

SolveReport report_from_json(const json& j)
{
    SolveReport r;
    r.algorithm = j.at("algorithm").get<std::string>();
    if (!j.at("guess_a").is_null())
        r.guess_a = j.at("guess_a").get<int>();
    r.eval.objective = rational_from_json(j.at("objective"));
    r.eval.Z = j.at("Z").get<Cost>();
    r.eval.dmax = j.at("dmax").get<Time>();
    r.eval.dev = j.at("deviations").get<std::vector<Time>>();
    r.schedule = schedule_from_json(j.at("schedule"));
    return r;
}

json result_to_json(const SolveResult& result, const PreparedInstance& prep)
{
    if (!result.report)
        return json{{"status", "infeasible"}, {"reason", result.infeasible_reason}};
    json j = report_to_json(*result.report, prep);
    j["status"] = "solved";
    return j;
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    return json::parse(in);
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out)
        throw std::runtime_error("write failed for " + path.string());
}

} // namespace resched
