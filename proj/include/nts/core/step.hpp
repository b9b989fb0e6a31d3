#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nts/core/config.hpp"
#include "nts/core/problem.hpp"
#include "nts/core/run_record.hpp"

namespace nts {

/// Concatenation of the move sets of several neighborhoods, indexed as one.
template <Problem P>
class NeighborhoodView {
public:
    using Solution = typename P::Solution;
    using Move = typename P::Move;
    using Set = decltype(std::declval<const P&>().moves(std::declval<const Solution&>(),
                                                        NeighborhoodId{}));

    NeighborhoodView(const P& problem, const Solution& s, std::span<const NeighborhoodId> group) {
        sets_.reserve(group.size());
        ends_.reserve(group.size());
        std::size_t total = 0;
        for (const auto id : group) {
            sets_.push_back(problem.moves(s, id));
            total += static_cast<std::size_t>(sets_.back().size());
            ends_.push_back(total);
        }
    }

    std::size_t size() const { return ends_.empty() ? 0 : ends_.back(); }

    Move operator[](std::size_t i) const {
        std::size_t begin = 0;
        for (std::size_t g = 0; g < sets_.size(); ++g) {
            if (i < ends_[g]) return sets_[g][i - begin];
            begin = ends_[g];
        }
        throw std::out_of_range("NeighborhoodView: move index out of range");
    }

private:
    std::vector<Set> sets_;
    std::vector<std::size_t> ends_;
};

/// Fisher-Yates shuffle drawn one element at a time.
class LazyPermutation {
public:
    void reset(std::size_t n) {
        order_.resize(n);
        std::iota(order_.begin(), order_.end(), std::size_t{0});
        next_ = 0;
    }
    bool done() const { return next_ == order_.size(); }
    std::size_t draw(Rng& rng) {
        const auto j = next_ + static_cast<std::size_t>(rng.below(order_.size() - next_));
        std::swap(order_[next_], order_[j]);
        return order_[next_++];
    }

private:
    std::vector<std::size_t> order_;
    std::size_t next_ = 0;
};

template <class Solution>
struct StepResult {
    Solution solution;
    Fitness fitness;
    std::uint64_t evals = 0;
};

namespace detail {

template <class Move>
struct PassResult {
    Move move;
    Fitness fitness;
};

// First neighbor strictly better than `current`, scanning in shuffled order.
template <Problem P>
std::optional<PassResult<typename P::Move>> first_improvement_pass(
    const P& problem, const typename P::Solution& s, Fitness current,
    std::span<const NeighborhoodId> group, Rng& rng, EvalMeter& meter, LazyPermutation& order) {
    const NeighborhoodView<P> view(problem, s, group);
    if (view.size() == 0) return std::nullopt;
    const auto evaluate = problem.move_evaluator(s);
    order.reset(view.size());
    while (!order.done() && !meter.exhausted()) {
        const auto move = view[order.draw(rng)];
        const Fitness f = evaluate(move);
        meter.record(f);
        if (f < current) return PassResult<typename P::Move>{move, f};
    }
    return std::nullopt;
}

// Minimum-fitness neighbor in enumeration order; the first one wins ties.
// Stops early when the budget runs out and reports the best seen.
template <Problem P>
std::optional<PassResult<typename P::Move>> best_improvement_pass(
    const P& problem, const typename P::Solution& s, std::span<const NeighborhoodId> group,
    EvalMeter& meter) {
    const NeighborhoodView<P> view(problem, s, group);
    const auto evaluate = problem.move_evaluator(s);
    std::optional<PassResult<typename P::Move>> best;
    for (std::size_t i = 0; i < view.size() && !meter.exhausted(); ++i) {
        auto move = view[i];
        const Fitness f = evaluate(move);
        meter.record(f);
        if (!best || f < best->fitness) best = PassResult<typename P::Move>{std::move(move), f};
    }
    return best;
}

}  // namespace detail

/// Applies one step function from `s` (fitness `fs`) over the union of the
/// neighborhoods in `group`. Every evaluation is booked on `meter`; when the
/// budget runs out mid-scan the incumbent of the scan is returned.
template <Problem P>
StepResult<typename P::Solution> apply_step(const P& problem, const typename P::Solution& s,
                                            Fitness fs, std::span<const NeighborhoodId> group,
                                            StepKind kind, Rng& rng, EvalMeter& meter,
                                            LazyPermutation& order) {
    const auto start = meter.used();
    StepResult<typename P::Solution> out{s, fs, 0};
    switch (kind) {
        case StepKind::FirstImprovement:
            if (auto pass = detail::first_improvement_pass(problem, s, fs, group, rng, meter, order)) {
                out.solution = problem.apply(s, pass->move);
                out.fitness = pass->fitness;
            }
            break;
        case StepKind::BestImprovement:
            if (auto pass = detail::best_improvement_pass(problem, s, group, meter)) {
                out.solution = problem.apply(s, pass->move);
                out.fitness = pass->fitness;
            }
            break;
        case StepKind::FirstDescent:
            while (!meter.exhausted()) {
                auto pass = detail::first_improvement_pass(problem, out.solution, out.fitness, group,
                                                           rng, meter, order);
                if (!pass) break;
                out.solution = problem.apply(out.solution, pass->move);
                out.fitness = pass->fitness;
            }
            break;
        case StepKind::BestDescent:
            while (!meter.exhausted()) {
                auto pass = detail::best_improvement_pass(problem, out.solution, group, meter);
                if (!pass || !(pass->fitness < out.fitness)) break;
                out.solution = problem.apply(out.solution, pass->move);
                out.fitness = pass->fitness;
            }
            break;
    }
    out.evals = meter.used() - start;
    return out;
}

template <Problem P>
StepResult<typename P::Solution> apply_step(const P& problem, const typename P::Solution& s,
                                            Fitness fs, NeighborhoodId id, StepKind kind, Rng& rng,
                                            EvalMeter& meter) {
    LazyPermutation order;
    const NeighborhoodId group[] = {id};
    return apply_step(problem, s, fs, std::span<const NeighborhoodId>(group), kind, rng, meter,
                      order);
}

}  // namespace nts
