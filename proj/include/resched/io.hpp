#pragma once

#include "resched/core.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace resched {

using nlohmann::json;

// Instance: {"jobs":[{"p":int,"w":int},...],"T1":int,"T2":int,"k":int,"mu":{"num":int,"den":int}}
// Schedule: {"starts":[int,...],"orig_ids":[int,...]}, both indexed by WSPT position.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json instance_to_json(const Instance& instance);
Instance instance_from_json(const json& j);

json schedule_to_json(const Schedule& schedule, const PreparedInstance& prep);
Schedule schedule_from_json(const json& j);

json report_to_json(const SolveReport& report, const PreparedInstance& prep);
SolveReport report_from_json(const json& j);

/// {"status":"solved", ...report} or {"status":"infeasible","reason":...}.
json result_to_json(const SolveResult& result, const PreparedInstance& prep);

/// Throws std::runtime_error on I/O failure and json::exception on bad JSON.
json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

} // namespace resched
