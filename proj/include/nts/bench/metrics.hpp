#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nts/bench/experiment.hpp"

namespace nts::bench {

/// Instance id -> optimal (or reference) objective value.
using ReferenceValues = std::map<std::string, double>;

/// True when f equals f_opt up to a 1e-9 relative tolerance.
bool is_optimal(double f, double f_opt);

/// 100 (f - f_opt) / max(f_opt, 1). Throws DataError when f < f_opt.
double deviation_percent(double f, double f_opt);

struct Summary {
    std::size_t instances = 0;
    std::size_t trials = 0;
    std::size_t n_opt = 0;
    double mean_deviation = 0.0;
    double mean_evals = 0.0;
    /// Percent of optimal trials, averaged over instances.
    double success_rate = 0.0;
};

/// Rows of a single algorithm. Throws DataError for a missing optimum or a
/// fitness below it.
Summary summarize(std::span<const TrialRow> rows, const ReferenceValues& optima);

/// Rows split by algorithm label.
std::map<std::string, std::vector<TrialRow>> by_algorithm(std::span<const TrialRow> rows);

struct RtdPoint {
    std::uint64_t evals = 0;
    double probability = 0.0;

    friend bool operator==(const RtdPoint&, const RtdPoint&) = default;
};

/// Step function: probability_at(e) is the value of the last point with
/// evals <= e, or 0 before the first point.
struct RtdCurve {
    double delta = 0.0;
    std::vector<RtdPoint> points;

    double probability_at(std::uint64_t evals) const;
};

/// First trace evaluation with fitness <= f_opt (1 + delta/100).
std::optional<std::uint64_t> hitting_evals(const TrialRow& row, double f_opt, double delta);

RtdCurve rtd(std::span<const TrialRow> rows, double f_opt, double delta);
/// Each row is measured against the optimum of its own instance.
RtdCurve rtd(std::span<const TrialRow> rows, const ReferenceValues& optima, double delta);

/// Algorithm -> instance -> gap.
using GapTable = std::map<std::string, std::map<std::string, double>>;

/// Mean deviation per (algorithm, instance).
GapTable average_gaps(std::span<const TrialRow> rows, const ReferenceValues& optima);

/// Total ranks per algorithm (1 = smallest gap; ties share the mean rank).
/// Throws DataError unless every algorithm covers the same instances.
std::map<std::string, double> borda(const GapTable& gaps);

enum class EvalCount { Total, ToBest };

struct HeadToHead {
    int n_gt = 0;
    double r_eval = 0.0;
};

/// n_gt sums +1/0/-1 per instance as a's average gap is below, equal to or
/// above b's. r_eval is the ratio of summed evaluations (a over b).
HeadToHead head_to_head(std::span<const TrialRow> rows_a, std::span<const TrialRow> rows_b,
                        const ReferenceValues& optima, EvalCount count = EvalCount::Total);

}  // namespace nts::bench
