#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nts/bench/experiment.hpp"
#include "nts/bench/metrics.hpp"

namespace nts::bench {

inline constexpr std::string_view kRowsHeader =
    "instance,algorithm,trial,seed,best_fitness,evals_to_best,evals_total,h_max,feasible,termination";
inline constexpr std::string_view kTracesHeader = "instance,algorithm,trial,evals,fitness";

std::string format_rows_csv(std::span<const TrialRow> rows);
std::string format_traces_csv(std::span<const TrialRow> rows);

/// Throws ParseError with the 1-based line number.
std::vector<TrialRow> parse_rows_csv(std::string_view text);
/// Attaches traces to rows keyed by (instance, algorithm, trial).
void attach_traces(std::vector<TrialRow>& rows, std::string_view traces_csv);

/// Writes rows.csv, traces.csv and meta.json into `dir` (created if needed).
void save_run(const std::filesystem::path& dir, std::span<const TrialRow> rows, const ExperimentSpec& spec);

/// Reads rows.csv and, when present, traces.csv from `dir`.
std::vector<TrialRow> load_run(const std::filesystem::path& dir);

/// "id value" per line, or one value per line mapped to ids "1", "2", ...
/// '#' starts a comment.
ReferenceValues parse_reference_values(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace nts::bench
