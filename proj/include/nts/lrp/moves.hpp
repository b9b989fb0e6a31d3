#pragma once

#include <cstdint>
#include <vector>

#include "nts/core/rng.hpp"
#include "nts/core/types.hpp"
#include "nts/lrp/lrp.hpp"

namespace nts::lrp {

inline constexpr int kNeighborhoodCount = 11;

/// One move of neighborhood `kind` (1..11). Field use per kind:
///
///   1  relocate client `a` of route `r1` to position `pos` of the same route
///   2  relocate client `a` of route `r1` to position `pos` of route `r2`
///   3  swap clients `a` < `b` of route `r1`
///   4  swap client `a` of route `r1` with client `b` of route `r2`
///   5  reverse positions `a`..`b` of route `r1`
///   6  exchange the tails of `r1` (from `a`) and `r2` (from `b`)
///   7  move the `len`-client segment at `a` of `r1` to position `pos` of `r1`
///   8  move the `len`-client segment at `a` of `r1` to position `pos` of `r2`
///   9  as 7 with the segment reversed
///   10 as 8 with the segment reversed
///   11 transfer the whole route of open depot `r1` to closed depot `r2`
///
/// Positions index the route after the moved clients were taken out.
struct Move {
    int kind = 1;
    int r1 = 0;
    int r2 = 0;
    int a = 0;
    int b = 0;
    int len = 1;
    int pos = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

/// Every move of neighborhood `id` from `s`, in a fixed order.
std::vector<Move> enumerate_moves(const Solution& s, NeighborhoodId id);

/// Writes the post-move content of route `r1` to `first` and, for moves
/// touching two routes, of `r2` to `second`. Returns the number of routes
/// touched (1 or 2).
int edit_routes(const Solution& s, const Move& move, std::vector<int>& first,
                std::vector<int>& second);

Solution apply(const Solution& s, const Move& move);

enum class Order { Deterministic, Shuffled };

/// Materialised neighbors of `s`; `rng` is required for Order::Shuffled.
std::vector<Solution> neighbors(const Instance& inst, const Solution& s, NeighborhoodId id,
                                Order order, Rng* rng = nullptr);

/// Exact fitness of a neighbor, recomputing only the touched depots.
/// Produces the same bits as evaluate() on the applied move.
class MoveEvaluator {
public:
    MoveEvaluator(const Instance& inst, const Solution& s);
    Fitness operator()(const Move& move) const;

private:
    const Instance* inst_;
    const Solution* solution_;
    std::vector<double> cost_;
    std::vector<double> penalty_;
    mutable std::vector<int> first_;
    mutable std::vector<int> second_;
};

/// Engine adapter over neighborhoods N1..N11.
class Adapter {
public:
    using Solution = lrp::Solution;
    using Move = lrp::Move;

    explicit Adapter(Instance inst) : inst_(std::move(inst)) {}

    const Instance& instance() const { return inst_; }
    int neighborhood_count() const { return kNeighborhoodCount; }
    Fitness evaluate(const Solution& s) const { return lrp::evaluate(inst_, s); }
    Solution random_solution(Rng& rng) const { return lrp::random_solution(inst_, rng); }
    std::vector<Move> moves(const Solution& s, NeighborhoodId id) const { return enumerate_moves(s, id); }
    Solution apply(const Solution& s, const Move& move) const { return lrp::apply(s, move); }
    MoveEvaluator move_evaluator(const Solution& s) const { return MoveEvaluator(inst_, s); }

private:
    Instance inst_;
};

}  // namespace nts::lrp
