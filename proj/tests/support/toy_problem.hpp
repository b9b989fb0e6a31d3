#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "nts/core/problem.hpp"
#include "nts/core/rng.hpp"

namespace nts::testing {

/// Explicit search graph: solutions are node numbers, fitness is a table
/// and neighborhood i of node s lists its neighbors in enumeration order.
class GraphProblem {
public:
    using Solution = int;
    using Move = int;  // target node

    GraphProblem(std::vector<double> fitness, int k, int start)
        : fitness_(std::move(fitness)), k_(k), start_(start) {}

    void connect(int from, int neighborhood, std::vector<int> targets) {
        edges_[{from, neighborhood}] = std::move(targets);
    }

    int neighborhood_count() const { return k_; }
    double evaluate(int s) const { return fitness_.at(static_cast<std::size_t>(s)); }
    int random_solution(Rng&) const { return start_; }
    std::vector<int> moves(int s, NeighborhoodId id) const {
        const auto it = edges_.find({s, id.value});
        return it == edges_.end() ? std::vector<int>{} : it->second;
    }
    int apply(int, int target) const { return target; }
    auto move_evaluator(int) const {
        return [this](int target) { return evaluate(target); };
    }

private:
    std::vector<double> fitness_;
    int k_;
    int start_;
    std::map<std::pair<int, int>, std::vector<int>> edges_;
};

/// Forwards to P and counts every fitness evaluation it hands out.
template <Problem P>
class CountingProblem {
public:
    using Solution = typename P::Solution;
    using Move = typename P::Move;

    explicit CountingProblem(const P& inner) : inner_(&inner), count_(std::make_shared<std::uint64_t>(0)) {}

    std::uint64_t count() const { return *count_; }

    int neighborhood_count() const { return inner_->neighborhood_count(); }
    auto evaluate(const Solution& s) const {
        ++*count_;
        return inner_->evaluate(s);
    }
    Solution random_solution(Rng& rng) const { return inner_->random_solution(rng); }
    auto moves(const Solution& s, NeighborhoodId id) const { return inner_->moves(s, id); }
    Solution apply(const Solution& s, const Move& move) const { return inner_->apply(s, move); }
    auto move_evaluator(const Solution& s) const {
        return [evaluator = inner_->move_evaluator(s), count = count_](const Move& move) {
            ++*count;
            return evaluator(move);
        };
    }

private:
    const P* inner_;
    std::shared_ptr<std::uint64_t> count_;
};

}  // namespace nts::testing
