#include "nts/core/strategies.hpp"

#include <algorithm>

namespace nts {

NeighborhoodId select_neighborhood(const UsageMask& usage, Rng& rng) {
    const int unused = usage.unused_count();
    if (unused == 0) {
        throw std::logic_error("select_neighborhood: every neighborhood already used");
    }
    auto pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(unused)));
    for (int i = 1; i <= usage.size(); ++i) {
        const NeighborhoodId id{i};
        if (usage.used(id)) continue;
        if (pick-- == 0) return id;
    }
    throw std::logic_error("select_neighborhood: unreachable");
}

bool decide_accept(AcceptKind kind, Fitness current, Fitness best_child, std::size_t depth,
                   Fitness candidate, Rng& rng) {
    switch (kind) {
        case AcceptKind::ImproveCurrent:
            return candidate < current;
        case AcceptKind::ImproveBestChild:
            return candidate < best_child;
        case AcceptKind::Adaptive:
            if (candidate < best_child) return true;
            if (candidate < current) return rng.bernoulli(1.0 / static_cast<double>(depth));
            return false;
    }
    return false;
}

std::optional<std::size_t> pick_backtrack_target(std::span<const BacktrackCandidate> candidates,
                                                 BacktrackKind kind, Rng& rng) {
    if (candidates.empty()) return std::nullopt;
    const auto n = candidates.size();
    if (kind == BacktrackKind::Random || n == 1) {
        return candidates[rng.below(n)].index;
    }

    // Two distinct positions, a < b in path order.
    auto first = static_cast<std::size_t>(rng.below(n));
    auto second = static_cast<std::size_t>(rng.below(n - 1));
    if (second >= first) ++second;
    const auto& a = candidates[std::min(first, second)];
    const auto& b = candidates[std::max(first, second)];

    if (kind == BacktrackKind::Height) {
        return a.index;
    }
    if (a.used_count != b.used_count) {
        return a.used_count < b.used_count ? a.index : b.index;
    }
    return rng.bernoulli(0.5) ? a.index : b.index;
}

}  // namespace nts
