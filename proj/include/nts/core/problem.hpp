#pragma once

#include <concepts>
#include <cstddef>
#include <utility>

#include "nts/core/rng.hpp"
#include "nts/core/types.hpp"

namespace nts {

/// Indexable, deterministic-order list of moves for one neighborhood of one solution.
template <class S, class Move>
concept MoveSet = requires(const S& set, std::size_t i) {
    { set.size() } -> std::convertible_to<std::size_t>;
    { set[i] } -> std::convertible_to<Move>;
};

/// What the search engines need from a problem domain.
///
/// `moves(s, id)` enumerates every move of neighborhood `id` exactly once,
/// in a fixed order. `move_evaluator(s)` returns a callable giving the exact
/// fitness of `apply(s, move)`; it may cache data derived from `s`, so `s`
/// must outlive it. Each call of `evaluate` or of the evaluator counts as one
/// fitness evaluation.
template <class P>
concept Problem = requires(const P& p, const typename P::Solution& s,
                           const typename P::Move& move, NeighborhoodId id, Rng& rng) {
    typename P::Solution;
    typename P::Move;
    { p.neighborhood_count() } -> std::convertible_to<int>;
    { p.evaluate(s) } -> std::convertible_to<Fitness>;
    { p.random_solution(rng) } -> std::same_as<typename P::Solution>;
    { p.moves(s, id) } -> MoveSet<typename P::Move>;
    { p.apply(s, move) } -> std::same_as<typename P::Solution>;
    { p.move_evaluator(s)(move) } -> std::convertible_to<Fitness>;
};

}  // namespace nts
