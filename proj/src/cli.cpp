#include "resched/cli.hpp"

#include "resched/core.hpp"
#include "resched/dp1.hpp"
#include "resched/dp2.hpp"
#include "resched/fptas.hpp"
#include "resched/generator.hpp"
#include "resched/io.hpp"
#include "resched/log.hpp"
#include "resched/oracle.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace resched {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << text;
    else
        write_text_file(path, text);
}

SolveResult run_algorithm(const PreparedInstance& prep, const std::string& algo, const Rational& epsilon,
                          OracleLimits limits = {})
{
    if (algo == "dp1")
        return solve_dp1(prep, prep.k, prep.mu);
    if (algo == "dp2") {
        if (!prep.mu.is_zero())
            throw UsageError("dp2 requires mu = 0");
        return solve_dp2(prep, prep.k);
    }
    if (algo == "fptas")
        return prep.mu.is_zero() ? approx_mu0(prep, prep.k, epsilon) : approx_general(prep, prep.k, prep.mu, epsilon);
    if (algo == "oracle") {
        SolveResult r;
        if (auto found = brute_force(prep, prep.k, prep.mu, limits))
            r.report = std::move(found->best);
        else
            r.infeasible_reason = "infeasible: no feasible schedule";
        return r;
    }
    throw UsageError("unknown algorithm " + algo);
}

std::string report_table(const SolveReport& r, const PreparedInstance& prep)
{
    std::ostringstream os;
    os << "algorithm  " << r.algorithm << '\n'
       << "guess_a    " << (r.guess_a ? std::to_string(*r.guess_a) : "-") << '\n'
       << "objective  " << r.eval.objective << '\n'
       << "Z          " << r.eval.Z << '\n'
       << "dmax       " << r.eval.dmax << '\n'
       << std::setw(5) << "job" << std::setw(6) << "orig" << std::setw(6) << "p" << std::setw(6) << "w"
       << std::setw(8) << "start" << std::setw(8) << "C" << std::setw(8) << "orig_C" << std::setw(6) << "dev"
       << '\n';
    for (int pos = 1; pos <= prep.n(); ++pos) {
        const Time s = r.schedule.start_of(pos);
        os << std::setw(5) << pos << std::setw(6) << prep.job(pos).orig_id << std::setw(6) << prep.p(pos)
           << std::setw(6) << prep.w(pos) << std::setw(8) << s << std::setw(8) << s + prep.p(pos) << std::setw(8)
           << prep.orig_C(pos) << std::setw(6) << r.eval.dev[pos - 1] << '\n';
    }
    return os.str();
}

int cmd_solve(const std::string& instance_path, const std::string& algo, const std::string& epsilon_text,
              const std::string& out_path, const std::string& format, std::ostream& out, std::ostream& err)
{
    const PreparedInstance prep = wspt_sort(instance_from_json(read_json_file(instance_path)));
    const SolveResult result = run_algorithm(prep, algo, Rational::parse(epsilon_text));
    if (format == "table")
        emit(result.report ? report_table(*result.report, prep) : result.infeasible_reason + "\n", out_path, out);
    else
        emit(result_to_json(result, prep).dump(2) + "\n", out_path, out);
    if (!result.report) {
        err << result.infeasible_reason << '\n';
        return kExitInfeasible;
    }
    return kExitOk;
}

int cmd_oracle(const std::string& instance_path, const OracleLimits& limits, const std::string& out_path,
               std::ostream& out, std::ostream& err)
{
    const PreparedInstance prep = wspt_sort(instance_from_json(read_json_file(instance_path)));
    auto found = brute_force(prep, prep.k, prep.mu, limits);
    if (!found) {
        emit(json{{"status", "infeasible"}, {"reason", "no feasible schedule"}}.dump(2) + "\n", out_path, out);
        err << "infeasible: no feasible schedule\n";
        return kExitInfeasible;
    }
    json j = report_to_json(found->best, prep);
    j["status"] = "solved";
    j["explored"] = found->explored;
    json optima = json::array();
    for (const Schedule& s : found->all_optima)
        optima.push_back(s.start);
    j["all_optima"] = std::move(optima);
    emit(j.dump(2) + "\n", out_path, out);
    return kExitOk;
}

int cmd_verify(const std::string& instance_path, const std::string& schedule_path, std::optional<Time> k,
               std::ostream& out)
{
    const PreparedInstance prep = wspt_sort(instance_from_json(read_json_file(instance_path)));
    const Schedule schedule = schedule_from_json(read_json_file(schedule_path));
    if (static_cast<int>(schedule.start.size()) != prep.n())
        throw std::runtime_error("schedule length does not match the instance");
    const auto violations = validate_structure(schedule, prep, k.value_or(prep.k));
    for (const Violation& v : violations)
        out << v.message << '\n';
    if (!violations.empty())
        return kExitVerifyFailed;
    const Evaluation ev = evaluate(schedule, prep, prep.mu);
    out << "ok: objective " << ev.objective << " Z " << ev.Z << " dmax " << ev.dmax << '\n';
    return kExitOk;
}

std::vector<GenSpec> load_suite(const std::string& path)
{
    json j = read_json_file(path);
    const json& entries = j.is_array() ? j : j.at("instances");
    std::vector<GenSpec> suite;
    for (const json& e : entries) {
        if (e.contains("seed_range")) {
            auto lo = e.at("seed_range").at(0).get<std::uint64_t>();
            auto hi = e.at("seed_range").at(1).get<std::uint64_t>();
            for (auto s = lo; s <= hi; ++s) {
                GenSpec g = genspec_from_json(e);
                g.seed = s;
                suite.push_back(g);
            }
        } else {
            suite.push_back(genspec_from_json(e));
        }
    }
    return suite;
}

bool is_exact(const std::string& algo)
{
    return algo == "dp1" || algo == "dp2" || algo == "oracle";
}

int cmd_bench(const std::string& suite_path, const std::string& algos_text, const std::string& eps_text,
              const std::string& out_path, std::ostream& out)
{
    const auto suite = load_suite(suite_path);
    if (suite.empty())
        throw UsageError("empty suite");
    const auto algos = split_list(algos_text);
    if (algos.empty())
        throw UsageError("no algorithms given");
    std::vector<Rational> epsilons;
    for (const auto& e : split_list(eps_text))
        epsilons.push_back(Rational::parse(e));

    struct Column {
        std::string algo;
        std::string label;
        Rational epsilon;
    };
    std::vector<Column> columns;
    for (const auto& a : algos) {
        if (a == "fptas") {
            for (const auto& e : epsilons)
                columns.push_back({a, "fptas(" + e.to_string() + ")", e});
        } else if (is_exact(a)) {
            columns.push_back({a, a, Rational(1)});
        } else {
            throw UsageError("unknown algorithm " + a);
        }
    }

    json rows = json::array();
    std::ostringstream table;
    table << std::setw(6) << "row" << std::setw(8) << "seed" << std::setw(4) << "n";
    for (const auto& c : columns)
        table << std::setw(16) << c.label << std::setw(10) << "ratio" << std::setw(10) << "ms";
    table << '\n';

    for (std::size_t i = 0; i < suite.size(); ++i) {
        json row{{"index", i}, {"seed", suite[i].seed}, {"n", suite[i].n}};
        json results = json::array();
        std::vector<std::optional<Rational>> objectives(columns.size());
        std::vector<double> millis(columns.size(), 0.0);
        std::vector<std::string> errors(columns.size());
        try {
            const Instance inst = generate(suite[i]);
            const PreparedInstance prep = wspt_sort(inst);
            row["instance"] = instance_to_json(inst);
            for (std::size_t c = 0; c < columns.size(); ++c) {
                const auto t0 = std::chrono::steady_clock::now();
                try {
                    SolveResult r = run_algorithm(prep, columns[c].algo, columns[c].epsilon);
                    if (r.report)
                        objectives[c] = r.report->eval.objective;
                    else
                        errors[c] = r.infeasible_reason;
                } catch (const std::exception& e) {
                    errors[c] = e.what();
                }
                millis[c] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            }
        } catch (const std::exception& e) {
            row["error"] = e.what();
        }

        std::optional<Rational> best_exact;
        std::optional<Rational> best_any;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (!objectives[c]) continue;
            if (!best_any || *objectives[c] < *best_any) best_any = objectives[c];
            if (is_exact(columns[c].algo) && (!best_exact || *objectives[c] < *best_exact))
                best_exact = objectives[c];
        }
        const auto reference = best_exact ? best_exact : best_any;

        table << std::setw(6) << i << std::setw(8) << suite[i].seed << std::setw(4) << suite[i].n;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            json cell{{"algorithm", columns[c].label}, {"ms", millis[c]}};
            if (objectives[c]) {
                cell["objective"] = rational_to_json(*objectives[c]);
                std::string ratio_text = "-";
                if (reference && !reference->is_zero()) {
                    const Rational ratio = *objectives[c] / *reference;
                    cell["ratio"] = rational_to_json(ratio);
                    std::ostringstream rs;
                    rs << std::fixed << std::setprecision(4) << ratio.to_double();
                    ratio_text = rs.str();
                }
                table << std::setw(16) << objectives[c]->to_string() << std::setw(10) << ratio_text;
            } else {
                cell["error"] = errors[c];
                table << std::setw(16) << "error" << std::setw(10) << "-";
            }
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(1) << millis[c];
            table << std::setw(10) << ms.str();
            results.push_back(std::move(cell));
        }
        table << '\n';
        row["results"] = std::move(results);
        rows.push_back(std::move(row));
    }

    out << table.str();
    if (!out_path.empty())
        write_text_file(out_path, json{{"rows", rows}}.dump(2) + "\n");
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Single-machine rescheduling around an unavailability window"};
    app.require_subcommand(1);

    std::string instance_path, out_path, algo = "dp1", epsilon = "0.5", format = "json";
    auto* solve = app.add_subcommand("solve", "Solve an instance");
    solve->add_option("--instance", instance_path, "Instance JSON")->required();
    solve->add_option("--algo", algo, "Solver")->check(CLI::IsMember({"dp1", "dp2", "fptas", "oracle"}));
    solve->add_option("--epsilon", epsilon, "FPTAS accuracy in (0, 1]");
    solve->add_option("--out", out_path, "Write the report here instead of stdout");
    solve->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

    GenSpec gen;
    std::string mu_text = "0", k_frac_text;
    std::vector<std::int64_t> p_range{gen.p.lo, gen.p.hi}, w_range{gen.w.lo, gen.w.hi}, gap_range{gen.gap.lo, gen.gap.hi},
        k_range;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
    gen_cmd->add_option("--n", gen.n, "Number of jobs")->required();
    gen_cmd->add_option("--seed", gen.seed, "RNG seed");
    gen_cmd->add_option("--p", p_range, "Processing time range LO HI")->expected(2);
    gen_cmd->add_option("--w", w_range, "Weight range LO HI")->expected(2);
    gen_cmd->add_option("--gap", gap_range, "T2 - T1 range LO HI")->expected(2);
    gen_cmd->add_option("--k", k_range, "Absolute cap range LO HI")->expected(2);
    gen_cmd->add_option("--k-frac", k_frac_text, "Cap as a fraction of P (default 1)");
    gen_cmd->add_option("--mu", mu_text, "Balancing factor, e.g. 3/2");
    gen_cmd->add_flag("--allow-trivial", gen.allow_trivial, "Keep trivial or infeasible draws");
    gen_cmd->add_option("--out", out_path, "Write the instance here instead of stdout");

    std::string schedule_path;
    std::optional<Time> verify_k;
    auto* verify = app.add_subcommand("verify", "Check a schedule's feasibility and structure");
    verify->add_option("--instance", instance_path, "Instance JSON")->required();
    verify->add_option("--schedule", schedule_path, "Schedule or report JSON")->required();
    verify->add_option("--k", verify_k, "Deviation cap (defaults to the instance's)");

    OracleLimits limits;
    auto* oracle = app.add_subcommand("oracle", "Brute-force solve a small instance");
    oracle->add_option("--instance", instance_path, "Instance JSON")->required();
    oracle->add_option("--max-n", limits.max_n, "Largest n accepted");
    oracle->add_option("--max-k", limits.max_k, "Largest effective k accepted");
    oracle->add_option("--out", out_path, "Write the report here instead of stdout");

    std::string suite_path, algos = "dp1,fptas", epsilons = "0.5";
    auto* bench = app.add_subcommand("bench", "Compare solvers over a generated suite");
    bench->add_option("--suite", suite_path, "Suite JSON: list of generator specs")->required();
    bench->add_option("--algos", algos, "Comma-separated solvers");
    bench->add_option("--epsilons", epsilons, "Comma-separated FPTAS accuracies");
    bench->add_option("--out", out_path, "Machine-readable results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*solve)
            return cmd_solve(instance_path, algo, epsilon, out_path, format, out, err);
        if (*gen_cmd) {
            gen.p = {p_range[0], p_range[1]};
            gen.w = {w_range[0], w_range[1]};
            gen.gap = {gap_range[0], gap_range[1]};
            if (!k_range.empty())
                gen.k_abs = IntRange{k_range[0], k_range[1]};
            if (!k_frac_text.empty())
                gen.k_frac = Rational::parse(k_frac_text);
            gen.mu = Rational::parse(mu_text);
            emit(instance_to_json(generate(gen)).dump() + "\n", out_path, out);
            return kExitOk;
        }
        if (*verify)
            return cmd_verify(instance_path, schedule_path, verify_k, out);
        if (*oracle)
            return cmd_oracle(instance_path, limits, out_path, out, err);
        if (*bench)
            return cmd_bench(suite_path, algos, epsilons, out_path, out);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace resched
