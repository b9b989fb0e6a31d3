#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <vector>

#include "nts/core/step.hpp"

namespace nts {

namespace detail {

// Classical VND over `groups`: restart from the first group after every
// improvement, advance after every failure, stop when the last one fails.
template <Problem P>
void vnd_descend(const P& problem, typename P::Solution& s, Fitness& f,
                 std::span<const std::vector<NeighborhoodId>> groups, StepKind kind, Rng& rng,
                 EvalMeter& meter, LazyPermutation& order) {
    std::size_t g = 0;
    while (g < groups.size() && !meter.exhausted()) {
        auto step = apply_step(problem, s, f, std::span<const NeighborhoodId>(groups[g]), kind, rng,
                               meter, order);
        if (step.fitness < f) {
            s = std::move(step.solution);
            f = step.fitness;
            g = 0;
        } else {
            ++g;
        }
    }
}

template <Problem P>
void check_ids(const P& problem, std::span<const NeighborhoodId> ids, const char* who) {
    const int k = problem.neighborhood_count();
    for (const auto id : ids) {
        if (id.value < 1 || id.value > k) {
            throw std::invalid_argument(std::string(who) + ": neighborhood id out of range");
        }
    }
}

template <class Solution>
void finish(RunRecord<Solution>& record, const EvalMeter& meter) {
    record.evals_total = meter.used();
    record.evals_to_best = meter.evals_to_best();
    record.trace = meter.trace();
}

}  // namespace detail

/// Variable neighborhood descent with a fixed ordering, optionally restarted
/// from fresh random solutions until the budget is spent.
template <Problem P>
RunRecord<typename P::Solution> run_vnd(const P& problem, std::span<const NeighborhoodId> ordering,
                                        StepKind step, std::uint64_t max_evals, bool restart,
                                        Rng& rng) {
    detail::check_ids(problem, ordering, "run_vnd");
    {
        std::vector<NeighborhoodId> sorted(ordering.begin(), ordering.end());
        std::sort(sorted.begin(), sorted.end());
        bool permutation = sorted.size() == static_cast<std::size_t>(problem.neighborhood_count());
        for (std::size_t i = 0; permutation && i < sorted.size(); ++i) {
            permutation = sorted[i].value == static_cast<int>(i) + 1;
        }
        if (!permutation) {
            throw std::invalid_argument("run_vnd: ordering must be a permutation of 1..k");
        }
    }
    if (max_evals < 1) throw std::invalid_argument("run_vnd: max_evals must be at least 1");

    std::vector<std::vector<NeighborhoodId>> groups;
    for (const auto id : ordering) groups.push_back({id});

    EvalMeter meter(max_evals);
    LazyPermutation order;
    auto s = problem.random_solution(rng);
    Fitness f = problem.evaluate(s);
    meter.record(f);
    RunRecord<typename P::Solution> record{s, f};

    while (true) {
        detail::vnd_descend(problem, s, f, std::span<const std::vector<NeighborhoodId>>(groups), step,
                            rng, meter, order);
        if (f < record.best_fitness) {
            record.best_fitness = f;
            record.best_solution = s;
        }
        if (meter.exhausted()) {
            record.termination = Termination::BudgetExhausted;
            break;
        }
        if (!restart) {
            record.termination = Termination::PathEmpty;
            break;
        }
        s = problem.random_solution(rng);
        f = problem.evaluate(s);
        meter.record(f);
    }
    detail::finish(record, meter);
    return record;
}

struct VnsConfig {
    /// Neighborhoods combined for random shaking moves.
    std::vector<NeighborhoodId> shake_ids;
    /// VND neighborhoods; each group is searched as the union of its members.
    std::vector<std::vector<NeighborhoodId>> groups;
    StepKind step = StepKind::FirstDescent;
    int max_shake = 1;
    std::uint64_t max_evals = 10'000'000;
};

struct VnsIteration {
    int shake_strength;
    int moves_applied;
    Fitness incumbent;
    Fitness local_optimum;
};

/// Basic VNS: shake with `strength` random moves, descend with VND, move on
/// improvement (strength back to 1) or increase the strength, cycling back
/// to 1 past max_shake. Runs until the budget is spent.
template <Problem P>
RunRecord<typename P::Solution> run_vns(const P& problem, const VnsConfig& config, Rng& rng,
                                        const std::function<void(const VnsIteration&)>& observer = {}) {
    if (config.groups.empty()) throw std::invalid_argument("run_vns: no VND groups");
    if (config.shake_ids.empty()) throw std::invalid_argument("run_vns: no shaking neighborhoods");
    if (config.max_shake < 1) throw std::invalid_argument("run_vns: max_shake must be at least 1");
    if (config.max_evals < 1) throw std::invalid_argument("run_vns: max_evals must be at least 1");
    detail::check_ids(problem, config.shake_ids, "run_vns");
    for (const auto& group : config.groups) detail::check_ids(problem, group, "run_vns");

    EvalMeter meter(config.max_evals);
    LazyPermutation order;
    auto incumbent = problem.random_solution(rng);
    Fitness incumbent_fitness = problem.evaluate(incumbent);
    meter.record(incumbent_fitness);
    RunRecord<typename P::Solution> record{incumbent, incumbent_fitness};
    record.termination = Termination::BudgetExhausted;

    int strength = 1;
    while (!meter.exhausted()) {
        auto x = incumbent;
        int applied = 0;
        for (int t = 0; t < strength; ++t) {
            const auto id = config.shake_ids[rng.below(config.shake_ids.size())];
            const auto moves = problem.moves(x, id);
            const auto count = static_cast<std::size_t>(moves.size());
            if (count == 0) continue;
            x = problem.apply(x, moves[static_cast<std::size_t>(rng.below(count))]);
            ++applied;
        }
        Fitness fx = problem.evaluate(x);
        meter.record(fx);
        detail::vnd_descend(problem, x, fx,
                            std::span<const std::vector<NeighborhoodId>>(config.groups), config.step,
                            rng, meter, order);
        if (fx < record.best_fitness) {
            record.best_fitness = fx;
            record.best_solution = x;
        }
        if (observer) observer({strength, applied, incumbent_fitness, fx});
        if (fx < incumbent_fitness) {
            incumbent = std::move(x);
            incumbent_fitness = fx;
            strength = 1;
        } else if (++strength > config.max_shake) {
            strength = 1;
        }
    }
    detail::finish(record, meter);
    return record;
}

}  // namespace nts
