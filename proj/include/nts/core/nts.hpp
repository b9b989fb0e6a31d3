#pragma once

#include <algorithm>
#include <functional>

#include "nts/core/path.hpp"
#include "nts/core/step.hpp"
#include "nts/core/strategies.hpp"

namespace nts {

/// One pass of the NTS loop, reported after the path was updated.
template <class Solution>
struct NtsIteration {
    const TrajectoryPath<Solution>* path;
    /// 0-based position of the entry that was stepped from.
    std::size_t from;
    NeighborhoodId selected;
    UsageMask usage_before;
    Fitness step_fitness;
    bool accepted;
    bool backtracked;
};

/// Neighborhood tree search.
///
/// Keeps a trajectory path of accepted solutions. From the head, an unused
/// neighborhood is drawn and stepped; an accepted result becomes the new
/// head, otherwise the head keeps exploring its remaining neighborhoods and,
/// once all are used, the search backtracks to an earlier entry that still
/// has unused ones. Entries keep their usage mask across backtracks, so an
/// explored (solution, neighborhood) branch is never re-entered.
///
/// Stops when the path empties or the evaluation budget is spent.
template <Problem P>
RunRecord<typename P::Solution> run_nts(
    const P& problem, const SearchConfig& config, Rng& rng,
    const std::function<void(const NtsIteration<typename P::Solution>&)>& observer = {}) {
    config.validate();
    const int k = problem.neighborhood_count();
    if (k < 1) throw std::invalid_argument("run_nts: problem has no neighborhoods");

    EvalMeter meter(config.max_evals);
    LazyPermutation order;

    RunRecord<typename P::Solution> record{problem.random_solution(rng)};
    const Fitness initial = problem.evaluate(record.best_solution);
    meter.record(initial);
    record.best_fitness = initial;

    TrajectoryPath<typename P::Solution> path;
    path.push(record.best_solution, initial, k);
    record.termination = Termination::BudgetExhausted;

    while (!meter.exhausted()) {
        auto& head = path.head();
        const std::size_t from = path.size() - 1;
        const UsageMask usage_before = head.usage;
        const NeighborhoodId id = select_neighborhood(head.usage, rng);
        const NeighborhoodId group[] = {id};
        auto step = apply_step(problem, head.solution, head.fitness,
                               std::span<const NeighborhoodId>(group), config.step, rng, meter,
                               order);
        head.usage.mark(id);

        if (step.fitness < record.best_fitness) {
            record.best_fitness = step.fitness;
            record.best_solution = step.solution;
        }
        if (meter.exhausted()) break;

        const bool accepted = decide_accept(config.accept, head, step.fitness, rng);
        head.best_child_fitness = std::min(head.best_child_fitness, step.fitness);
        bool backtracked = false;
        if (accepted) {
            path.push(std::move(step.solution), step.fitness, k);
            record.h_max = std::max<std::uint64_t>(record.h_max, path.size());
        } else if (head.usage.all_used()) {
            backtrack(path, config.backtrack, rng);
            backtracked = true;
        }
        if (observer) observer({&path, from, id, usage_before, step.fitness, accepted, backtracked});
        if (path.empty()) {
            record.termination = Termination::PathEmpty;
            break;
        }
    }

    record.evals_total = meter.used();
    record.evals_to_best = meter.evals_to_best();
    record.trace = meter.trace();
    return record;
}

template <Problem P>
RunRecord<typename P::Solution> run_nts(const P& problem, const SearchConfig& config) {
    Rng rng(config.seed);
    return run_nts(problem, config, rng);
}

}  // namespace nts
