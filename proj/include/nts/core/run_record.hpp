#pragma once

#include <cstdint>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "nts/core/rng.hpp"
#include "nts/core/types.hpp"

namespace nts {

/// Counts fitness evaluations against a budget and keeps the improvement trace.
class EvalMeter {
public:
    explicit EvalMeter(std::uint64_t limit) : limit_(limit) {}

    bool exhausted() const { return used_ >= limit_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }
    Fitness best() const { return best_; }
    std::uint64_t evals_to_best() const { return trace_.empty() ? 0 : trace_.back().evals; }
    const std::vector<TracePoint>& trace() const { return trace_; }

    /// Books one evaluation that produced `f`. Callers check exhausted() first.
    void record(Fitness f) {
        ++used_;
        if (f < best_) {
            best_ = f;
            trace_.push_back({used_, f});
        }
    }

private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    Fitness best_ = std::numeric_limits<Fitness>::infinity();
    std::vector<TracePoint> trace_;
};

template <class Solution>
struct RunRecord {
    RunRecord() = default;
    explicit RunRecord(Solution solution, Fitness fitness = 0.0)
        : best_solution(std::move(solution)), best_fitness(fitness) {}

    Solution best_solution;
    Fitness best_fitness = 0.0;
    std::uint64_t evals_total = 0;
    std::uint64_t evals_to_best = 0;
    std::uint64_t h_max = 1;
    /// (evaluation index, best so far) at every strict improvement; the
    /// first point is the initial solution.
    std::vector<TracePoint> trace;
    Termination termination = Termination::PathEmpty;
    std::string_view rng_algorithm = Rng::kAlgorithm;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

}  // namespace nts
