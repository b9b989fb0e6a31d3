#pragma once

#include <compare>
#include <cstdint>
#include <string_view>

namespace nts {

/// Objective value, minimised.
using Fitness = double;

/// 1-based index of a neighborhood structure in [1, k].
struct NeighborhoodId {
    int value = 1;

    constexpr std::size_t index() const { return static_cast<std::size_t>(value - 1); }

    friend constexpr auto operator<=>(NeighborhoodId, NeighborhoodId) = default;
};

/// Why a run stopped. Baselines without a trajectory path (VND without
/// restart) report PathEmpty when their own stopping rule fires.
enum class Termination { PathEmpty, BudgetExhausted };

std::string_view to_string(Termination t);
Termination parse_termination(std::string_view text);

struct TracePoint {
    std::uint64_t evals = 0;
    Fitness fitness = 0.0;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

}  // namespace nts
