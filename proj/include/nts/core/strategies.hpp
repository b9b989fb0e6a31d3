#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nts/core/config.hpp"
#include "nts/core/path.hpp"
#include "nts/core/rng.hpp"

namespace nts {

/// Uniform pick among the neighborhoods not yet used from this solution.
/// Throws std::logic_error when every neighborhood is used.
NeighborhoodId select_neighborhood(const UsageMask& usage, Rng& rng);

/// Acceptance decision for a stepped solution of fitness `candidate` taken
/// from a head with fitness `current`, best child `best_child` and 1-based
/// `depth`. Pure: the caller folds `candidate` into best_child afterwards.
bool decide_accept(AcceptKind kind, Fitness current, Fitness best_child, std::size_t depth,
                   Fitness candidate, Rng& rng);

template <class Solution>
bool decide_accept(AcceptKind kind, const PathEntry<Solution>& head, Fitness candidate, Rng& rng) {
    return decide_accept(kind, head.fitness, head.best_child_fitness, head.depth, candidate, rng);
}

struct BacktrackCandidate {
    std::size_t index;  ///< 0-based path position
    int used_count;
};

/// Chooses the backtrack target among candidates listed in path order.
/// Returns nullopt when there are none.
std::optional<std::size_t> pick_backtrack_target(std::span<const BacktrackCandidate> candidates,
                                                 BacktrackKind kind, Rng& rng);

/// Truncates the path so the chosen entry becomes the head, keeping its
/// usage mask. Clears the path when no entry has an unused neighborhood.
template <class Solution>
void backtrack(TrajectoryPath<Solution>& path, BacktrackKind kind, Rng& rng) {
    if (path.empty() || !path.head().usage.all_used()) {
        throw std::logic_error("backtrack: head still has unused neighborhoods");
    }
    std::vector<BacktrackCandidate> candidates;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const auto& usage = path[i].usage;
        if (!usage.all_used()) {
            candidates.push_back({i, usage.used_count()});
        }
    }
    if (const auto target = pick_backtrack_target(candidates, kind, rng)) {
        path.truncate_after(*target);
    } else {
        path.clear();
    }
}

}  // namespace nts
