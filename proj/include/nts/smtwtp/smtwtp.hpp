#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nts/core/rng.hpp"
#include "nts/core/types.hpp"

/// Single machine total weighted tardiness.
namespace nts::smtwtp {

/// Processing times p, weights w and due dates d of n jobs.
class Instance {
public:
    Instance(std::vector<std::int64_t> processing, std::vector<std::int64_t> weight,
             std::vector<std::int64_t> due);

    std::size_t size() const { return processing_.size(); }
    std::span<const std::int64_t> processing() const { return processing_; }
    std::span<const std::int64_t> weight() const { return weight_; }
    std::span<const std::int64_t> due() const { return due_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<std::int64_t> processing_;
    std::vector<std::int64_t> weight_;
    std::vector<std::int64_t> due_;
};

/// Processing order; `perm[pos]` is a 0-based job index.
struct Schedule {
    std::vector<int> perm;

    friend bool operator==(const Schedule&, const Schedule&) = default;
};

bool is_valid(const Instance& inst, const Schedule& s);

/// Sum of w_j * max(0, C_j - d_j), computed exactly in integers.
std::int64_t weighted_tardiness(const Instance& inst, const Schedule& s);

inline Fitness evaluate(const Instance& inst, const Schedule& s) {
    return static_cast<Fitness>(weighted_tardiness(inst, s));
}

Schedule random_schedule(const Instance& inst, Rng& rng);

/// Neighborhood ids as seen by the engines.
enum class Neighborhood { Exchange = 1, Swap = 2, Insert = 3 };

inline NeighborhoodId id_of(Neighborhood n) { return NeighborhoodId{static_cast<int>(n)}; }

/// 'E', 'S' or 'I'.
Neighborhood neighborhood_from_letter(char c);

/// Exchange: transpose positions i and i+1. Swap: exchange positions i < j.
/// Insert: move the job at position i so that it ends at position j != i.
struct Move {
    Neighborhood kind;
    int i;
    int j;

    friend bool operator==(const Move&, const Move&) = default;
};

Schedule apply(const Schedule& s, const Move& move);

/// n-1, n(n-1)/2 and n(n-1) moves respectively (zero for n < 2).
std::size_t neighborhood_size(std::size_t n, Neighborhood kind);

/// All moves of one neighborhood in lexicographic order, indexed lazily.
class MoveList {
public:
    MoveList(Neighborhood kind, int n, const std::vector<std::pair<int, int>>* pairs)
        : kind_(kind), n_(n), pairs_(pairs) {}

    std::size_t size() const { return neighborhood_size(static_cast<std::size_t>(n_), kind_); }
    Move operator[](std::size_t index) const;

private:
    Neighborhood kind_;
    int n_;
    const std::vector<std::pair<int, int>>* pairs_;  // (i, j), i < j, for Swap
};

/// Exact fitness of a neighbor, recomputing only the positions it changes.
class MoveEvaluator {
public:
    MoveEvaluator(const Instance& inst, const Schedule& s);
    Fitness operator()(const Move& move) const;

private:
    std::int64_t segment_cost(int first, int last, const Move& move) const;

    const Instance* inst_;
    const Schedule* schedule_;
    std::vector<std::int64_t> completion_;   // completion time at each position
    std::vector<std::int64_t> prefix_cost_;  // cost of positions [0, i)
};

enum class Order { Deterministic, Shuffled };

/// Materialised neighbors of `s`; `rng` is required for Order::Shuffled.
std::vector<Schedule> neighbors(const Instance& inst, const Schedule& s, Neighborhood kind,
                                Order order, Rng* rng = nullptr);

/// Engine adapter: neighborhoods 1 = Exchange, 2 = Swap, 3 = Insert.
class Adapter {
public:
    using Solution = Schedule;
    using Move = smtwtp::Move;

    explicit Adapter(Instance inst);

    const Instance& instance() const { return inst_; }
    int neighborhood_count() const { return 3; }
    Fitness evaluate(const Schedule& s) const { return smtwtp::evaluate(inst_, s); }
    Schedule random_solution(Rng& rng) const { return random_schedule(inst_, rng); }
    MoveList moves(const Schedule& s, NeighborhoodId id) const;
    Schedule apply(const Schedule& s, const Move& move) const { return smtwtp::apply(s, move); }
    MoveEvaluator move_evaluator(const Schedule& s) const { return MoveEvaluator(inst_, s); }

private:
    Instance inst_;
    std::vector<std::pair<int, int>> swap_pairs_;
};

}  // namespace nts::smtwtp
