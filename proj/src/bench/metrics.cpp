#include "nts/bench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nts/core/errors.hpp"
#include "nts/core/format.hpp"

namespace nts::bench {

namespace {

constexpr double kRelativeTolerance = 1e-9;

double slack(double reference) { return kRelativeTolerance * std::max(std::abs(reference), 1.0); }

double optimum_of(const ReferenceValues& optima, const std::string& instance) {
    const auto it = optima.find(instance);
    if (it == optima.end()) throw DataError("no reference value for instance '" + instance + "'");
    return it->second;
}

// Instance -> rows, in id order.
std::map<std::string, std::vector<const TrialRow*>> by_instance(std::span<const TrialRow> rows) {
    std::map<std::string, std::vector<const TrialRow*>> grouped;
    for (const auto& row : rows) grouped[row.instance].push_back(&row);
    return grouped;
}

std::uint64_t count_of(const TrialRow& row, EvalCount count) {
    return count == EvalCount::Total ? row.evals_total : row.evals_to_best;
}

}  // namespace

bool is_optimal(double f, double f_opt) { return std::abs(f - f_opt) <= slack(f_opt); }

double deviation_percent(double f, double f_opt) {
    if (f < f_opt - slack(f_opt)) {
        throw DataError("fitness " + format_real(f) + " is below the reference value " + format_real(f_opt));
    }
    if (is_optimal(f, f_opt)) return 0.0;
    return 100.0 * (f - f_opt) / std::max(f_opt, 1.0);
}

Summary summarize(std::span<const TrialRow> rows, const ReferenceValues& optima) {
    Summary summary;
    if (rows.empty()) return summary;
    double deviation_sum = 0.0;
    double evals_sum = 0.0;
    double success_sum = 0.0;
    for (const auto& [instance, group] : by_instance(rows)) {
        const double f_opt = optimum_of(optima, instance);
        std::size_t hits = 0;
        for (const TrialRow* row : group) {
            deviation_sum += deviation_percent(row->best_fitness, f_opt);
            evals_sum += static_cast<double>(row->evals_total);
            if (is_optimal(row->best_fitness, f_opt)) ++hits;
        }
        if (hits > 0) ++summary.n_opt;
        success_sum += 100.0 * static_cast<double>(hits) / static_cast<double>(group.size());
        ++summary.instances;
    }
    summary.trials = rows.size();
    summary.mean_deviation = deviation_sum / static_cast<double>(rows.size());
    summary.mean_evals = evals_sum / static_cast<double>(rows.size());
    summary.success_rate = success_sum / static_cast<double>(summary.instances);
    return summary;
}

std::map<std::string, std::vector<TrialRow>> by_algorithm(std::span<const TrialRow> rows) {
    std::map<std::string, std::vector<TrialRow>> grouped;
    for (const auto& row : rows) grouped[row.algorithm].push_back(row);
    return grouped;
}

double RtdCurve::probability_at(std::uint64_t evals) const {
    const auto it = std::upper_bound(points.begin(), points.end(), evals,
                                     [](std::uint64_t e, const RtdPoint& p) { return e < p.evals; });
    return it == points.begin() ? 0.0 : std::prev(it)->probability;
}

std::optional<std::uint64_t> hitting_evals(const TrialRow& row, double f_opt, double delta) {
    const double bound = f_opt * (1.0 + delta / 100.0);
    for (const auto& point : row.trace) {
        if (point.fitness <= bound + slack(bound)) return point.evals;
    }
    return std::nullopt;
}

namespace {

RtdCurve curve_from(std::vector<std::uint64_t> hits, std::size_t trials, double delta) {
    RtdCurve curve;
    curve.delta = delta;
    std::sort(hits.begin(), hits.end());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        if (i + 1 < hits.size() && hits[i + 1] == hits[i]) continue;
        curve.points.push_back({hits[i], static_cast<double>(i + 1) / static_cast<double>(trials)});
    }
    return curve;
}

}  // namespace

RtdCurve rtd(std::span<const TrialRow> rows, double f_opt, double delta) {
    std::vector<std::uint64_t> hits;
    for (const auto& row : rows) {
        if (const auto e = hitting_evals(row, f_opt, delta)) hits.push_back(*e);
    }
    return curve_from(std::move(hits), rows.size(), delta);
}

RtdCurve rtd(std::span<const TrialRow> rows, const ReferenceValues& optima, double delta) {
    std::vector<std::uint64_t> hits;
    for (const auto& row : rows) {
        if (const auto e = hitting_evals(row, optimum_of(optima, row.instance), delta)) hits.push_back(*e);
    }
    return curve_from(std::move(hits), rows.size(), delta);
}

GapTable average_gaps(std::span<const TrialRow> rows, const ReferenceValues& optima) {
    GapTable table;
    for (const auto& [algorithm, group] : by_algorithm(rows)) {
        for (const auto& [instance, trials] : by_instance(group)) {
            const double f_opt = optimum_of(optima, instance);
            double sum = 0.0;
            for (const TrialRow* row : trials) sum += deviation_percent(row->best_fitness, f_opt);
            table[algorithm][instance] = sum / static_cast<double>(trials.size());
        }
    }
    return table;
}

std::map<std::string, double> borda(const GapTable& gaps) {
    std::map<std::string, double> scores;
    if (gaps.empty()) return scores;
    std::set<std::string> instances;
    for (const auto& [instance, gap] : gaps.begin()->second) instances.insert(instance);
    for (const auto& [algorithm, per_instance] : gaps) {
        if (per_instance.size() != instances.size()) throw DataError("algorithm '" + algorithm + "' misses instances");
        for (const auto& [instance, gap] : per_instance) {
            if (!instances.contains(instance)) throw DataError("instance '" + instance + "' not shared by all algorithms");
        }
        scores[algorithm] = 0.0;
    }
    std::vector<std::pair<double, const std::string*>> ranked;
    for (const auto& instance : instances) {
        ranked.clear();
        for (const auto& [algorithm, per_instance] : gaps) ranked.emplace_back(per_instance.at(instance), &algorithm);
        std::sort(ranked.begin(), ranked.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (std::size_t i = 0; i < ranked.size();) {
            std::size_t j = i;
            while (j < ranked.size() && ranked[j].first == ranked[i].first) ++j;
            // Ranks i+1..j share their mean.
            const double rank = static_cast<double>(i + 1 + j) / 2.0;
            for (std::size_t t = i; t < j; ++t) scores[*ranked[t].second] += rank;
            i = j;
        }
    }
    return scores;
}

HeadToHead head_to_head(std::span<const TrialRow> rows_a, std::span<const TrialRow> rows_b,
                        const ReferenceValues& optima, EvalCount count) {
    const auto a = by_instance(rows_a);
    const auto b = by_instance(rows_b);
    if (a.size() != b.size()) throw DataError("head-to-head row sets cover different instances");
    HeadToHead result;
    double evals_a = 0.0;
    double evals_b = 0.0;
    for (const auto& [instance, trials_a] : a) {
        const auto it = b.find(instance);
        if (it == b.end()) throw DataError("instance '" + instance + "' missing from the second row set");
        const auto& trials_b = it->second;
        if (trials_a.size() != trials_b.size()) throw DataError("trial counts differ on instance '" + instance + "'");
        const double f_opt = optimum_of(optima, instance);
        double gap_a = 0.0;
        double gap_b = 0.0;
        for (const TrialRow* row : trials_a) {
            gap_a += deviation_percent(row->best_fitness, f_opt);
            evals_a += static_cast<double>(count_of(*row, count));
        }
        for (const TrialRow* row : trials_b) {
            gap_b += deviation_percent(row->best_fitness, f_opt);
            evals_b += static_cast<double>(count_of(*row, count));
        }
        result.n_gt += gap_a < gap_b ? 1 : (gap_a > gap_b ? -1 : 0);
    }
    if (evals_b == 0.0) throw DataError("head-to-head denominator has zero evaluations");
    result.r_eval = evals_a / evals_b;
    return result;
}

}  // namespace nts::bench
