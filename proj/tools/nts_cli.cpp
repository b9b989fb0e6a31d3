// nts: run experiments and analyze their rows.
//
//   nts run --problem smtwtp --instances wt40.txt --algo nts --step fd ... --out DIR
//   nts analyze --rows DIR --optima wt40opt.txt --report summary --out summary.json

#include <cstdio>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nts/bench/experiment.hpp"
#include "nts/bench/metrics.hpp"
#include "nts/bench/table_io.hpp"
#include "nts/core/errors.hpp"
#include "nts/core/format.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunOptions {
    std::string problem;
    std::string instances;
    std::string algo = "nts";
    std::string step = "fd";
    std::string accept = "aa";
    std::string backtrack = "br";
    std::string ordering;
    std::size_t trials = 1;
    std::uint64_t max_evals = 10'000'000;
    std::uint64_t seed = 0;
    unsigned workers = 0;
    std::string label;
    std::string out;
};

struct AnalyzeOptions {
    std::vector<std::string> rows;
    std::string optima;
    std::string report = "summary";
    double delta = 0.0;
    std::string out = "-";
    std::string instance;
    std::string algorithm;
    std::string a;
    std::string b;
    bool evals_to_best = false;
};

void emit(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::fwrite(text.data(), 1, text.size(), stdout);
    } else {
        nts::bench::write_text_file(path, text);
    }
}

int run_command(const RunOptions& o) {
    using namespace nts::bench;
    ExperimentSpec spec;
    try {
        spec.problem = parse_problem_kind(o.problem);
        spec.algorithm = parse_algorithm(o.algo);
        spec.step = nts::parse_step_kind(o.step);
        spec.accept = nts::parse_accept_kind(o.accept);
        spec.backtrack = nts::parse_backtrack_kind(o.backtrack);
        spec.ordering = parse_ordering(spec.problem, o.ordering);
        spec.instances = o.instances;
        spec.trials = o.trials;
        spec.max_evals = o.max_evals;
        spec.base_seed = o.seed;
        spec.workers = o.workers;
        spec.label = o.label;
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const auto instances = load_instances(spec.problem, spec.instances);
    std::vector<TrialRow> rows;
    try {
        rows = run_experiment(spec, instances);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    save_run(o.out, rows, spec);
    std::fprintf(stderr, "%zu rows written to %s\n", rows.size(), o.out.c_str());
    return 0;
}

std::vector<nts::bench::TrialRow> load_all(const std::vector<std::string>& dirs) {
    std::vector<nts::bench::TrialRow> rows;
    for (const auto& dir : dirs) {
        auto part = nts::bench::load_run(dir);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

std::vector<nts::bench::TrialRow> select(const std::vector<nts::bench::TrialRow>& rows, const std::string& algorithm,
                                         const std::string& instance) {
    std::vector<nts::bench::TrialRow> out;
    for (const auto& row : rows) {
        if (!algorithm.empty() && row.algorithm != algorithm) continue;
        if (!instance.empty() && row.instance != instance) continue;
        out.push_back(row);
    }
    return out;
}

int analyze_command(const AnalyzeOptions& o) {
    using namespace nts::bench;
    using nlohmann::ordered_json;
    const auto rows = load_all(o.rows);
    const auto optima = parse_reference_values(read_text_file(o.optima));

    if (o.report == "summary") {
        ordered_json out;
        out["deviation"] = "100*(f-f_opt)/max(f_opt,1)";
        for (const auto& [algorithm, group] : by_algorithm(rows)) {
            const auto s = summarize(group, optima);
            ordered_json entry;
            entry["instances"] = s.instances;
            entry["trials"] = s.trials;
            entry["n_opt"] = s.n_opt;
            entry["mean_deviation"] = s.mean_deviation;
            entry["mean_evals"] = s.mean_evals;
            entry["success_rate"] = s.success_rate;
            out["algorithms"][algorithm] = entry;
        }
        emit(o.out, out.dump(2) + '\n');
    } else if (o.report == "rtd") {
        const auto chosen = select(rows, o.algorithm, o.instance);
        if (chosen.empty()) throw UsageError("no rows match the --algorithm/--instance filter");
        const auto curve = rtd(chosen, optima, o.delta);
        std::string text;
        for (const auto& p : curve.points) {
            text += std::to_string(p.evals) + ' ' + nts::format_real(p.probability) + '\n';
        }
        emit(o.out, text);
    } else if (o.report == "borda") {
        ordered_json out;
        for (const auto& [algorithm, score] : borda(average_gaps(rows, optima))) out[algorithm] = score;
        emit(o.out, out.dump(2) + '\n');
    } else {
        if (o.a.empty() || o.b.empty()) throw UsageError("h2h needs --a and --b algorithm labels");
        const auto rows_a = select(rows, o.a, "");
        const auto rows_b = select(rows, o.b, "");
        if (rows_a.empty() || rows_b.empty()) throw UsageError("no rows for one of the h2h algorithms");
        const auto result =
            head_to_head(rows_a, rows_b, optima, o.evals_to_best ? EvalCount::ToBest : EvalCount::Total);
        ordered_json out;
        out["a"] = o.a;
        out["b"] = o.b;
        out["n_gt"] = result.n_gt;
        out["r_eval"] = result.r_eval;
        out["evals"] = o.evals_to_best ? "evals_to_best" : "evals_total";
        emit(o.out, out.dump(2) + '\n');
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Neighborhood tree search experiments"};
    app.require_subcommand(1);

    RunOptions run;
    auto* run_cmd = app.add_subcommand("run", "Run trials and write rows.csv, traces.csv, meta.json");
    run_cmd->add_option("--problem", run.problem)->required()->check(CLI::IsMember({"smtwtp", "lrp"}));
    run_cmd->add_option("--instances", run.instances, "Instance file or directory")->required();
    run_cmd->add_option("--algo", run.algo)->check(CLI::IsMember({"nts", "vnd", "vnd-restart", "vns"}));
    run_cmd->add_option("--step", run.step)->check(CLI::IsMember({"fi", "bi", "fd", "bd"}, CLI::ignore_case));
    run_cmd->add_option("--accept", run.accept)->check(CLI::IsMember({"aa", "ai", "at"}, CLI::ignore_case));
    run_cmd->add_option("--backtrack", run.backtrack)->check(CLI::IsMember({"br", "bh", "bu"}, CLI::ignore_case));
    run_cmd->add_option("--ordering", run.ordering, "Neighborhood order, e.g. ESI or 1,3,2");
    run_cmd->add_option("--trials", run.trials)->check(CLI::PositiveNumber);
    run_cmd->add_option("--max-evals", run.max_evals)->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", run.seed, "Base seed; trial t uses seed + t");
    run_cmd->add_option("--workers", run.workers, "Worker threads (0: hardware concurrency)");
    run_cmd->add_option("--label", run.label, "Algorithm label written to the rows");
    run_cmd->add_option("--out", run.out, "Output directory")->required();

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Compute metrics from saved rows");
    analyze_cmd->add_option("--rows", analyze.rows, "Run directory (repeatable)")->required();
    analyze_cmd->add_option("--optima", analyze.optima, "Reference values: 'id value' lines or a plain list")
        ->required();
    analyze_cmd->add_option("--report", analyze.report)->check(CLI::IsMember({"summary", "rtd", "borda", "h2h"}));
    analyze_cmd->add_option("--delta", analyze.delta, "RTD quality bound in percent")->check(CLI::NonNegativeNumber);
    analyze_cmd->add_option("--out", analyze.out, "Output file ('-' for stdout)");
    analyze_cmd->add_option("--instance", analyze.instance, "RTD: restrict to one instance");
    analyze_cmd->add_option("--algorithm", analyze.algorithm, "RTD: restrict to one algorithm label");
    analyze_cmd->add_option("--a", analyze.a, "h2h: first algorithm label");
    analyze_cmd->add_option("--b", analyze.b, "h2h: second algorithm label");
    analyze_cmd->add_flag("--evals-to-best", analyze.evals_to_best, "h2h: compare evals_to_best");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (run_cmd->parsed()) return run_command(run);
        return analyze_command(analyze);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return kUsageError;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kDataError;
    }
}
