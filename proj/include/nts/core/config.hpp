#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace nts {

/// FI/BI are single improvement steps, FD/BD iterate them to a local optimum.
enum class StepKind { FirstImprovement, BestImprovement, FirstDescent, BestDescent };

/// AA: improve the current solution. AI: improve the best child observed
/// from it. AT: AI, or AA with probability 1/depth.
enum class AcceptKind { ImproveCurrent, ImproveBestChild, Adaptive };

/// BR: uniform. BH: tournament of two, shallower wins. BU: tournament of
/// two, fewer used neighborhoods wins.
enum class BacktrackKind { Random, Height, Usage };

struct SearchConfig {
    StepKind step = StepKind::FirstDescent;
    AcceptKind accept = AcceptKind::ImproveCurrent;
    BacktrackKind backtrack = BacktrackKind::Random;
    std::uint64_t max_evals = 10'000'000;
    std::uint64_t seed = 0;

    void validate() const;

    /// "NTS-(FD,AA,BR)"
    std::string label() const;
};

std::string_view to_string(StepKind k);
std::string_view to_string(AcceptKind k);
std::string_view to_string(BacktrackKind k);

// Case-insensitive; throw std::invalid_argument on unknown names.
StepKind parse_step_kind(std::string_view text);
AcceptKind parse_accept_kind(std::string_view text);
BacktrackKind parse_backtrack_kind(std::string_view text);

}  // namespace nts
