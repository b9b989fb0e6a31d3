#include "nts/core/config.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "nts/core/types.hpp"

namespace nts {

namespace {

std::string upper(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

}  // namespace

std::string_view to_string(Termination t) {
    return t == Termination::PathEmpty ? "PATH_EMPTY" : "BUDGET_EXHAUSTED";
}

Termination parse_termination(std::string_view text) {
    if (text == "PATH_EMPTY") return Termination::PathEmpty;
    if (text == "BUDGET_EXHAUSTED") return Termination::BudgetExhausted;
    throw std::invalid_argument("unknown termination reason: " + std::string(text));
}

std::string_view to_string(StepKind k) {
    switch (k) {
        case StepKind::FirstImprovement: return "FI";
        case StepKind::BestImprovement: return "BI";
        case StepKind::FirstDescent: return "FD";
        case StepKind::BestDescent: return "BD";
    }
    return "?";
}

std::string_view to_string(AcceptKind k) {
    switch (k) {
        case AcceptKind::ImproveCurrent: return "AA";
        case AcceptKind::ImproveBestChild: return "AI";
        case AcceptKind::Adaptive: return "AT";
    }
    return "?";
}

std::string_view to_string(BacktrackKind k) {
    switch (k) {
        case BacktrackKind::Random: return "BR";
        case BacktrackKind::Height: return "BH";
        case BacktrackKind::Usage: return "BU";
    }
    return "?";
}

StepKind parse_step_kind(std::string_view text) {
    const auto s = upper(text);
    if (s == "FI") return StepKind::FirstImprovement;
    if (s == "BI") return StepKind::BestImprovement;
    if (s == "FD") return StepKind::FirstDescent;
    if (s == "BD") return StepKind::BestDescent;
    throw std::invalid_argument("unknown step kind: " + std::string(text));
}

AcceptKind parse_accept_kind(std::string_view text) {
    const auto s = upper(text);
    if (s == "AA") return AcceptKind::ImproveCurrent;
    if (s == "AI") return AcceptKind::ImproveBestChild;
    if (s == "AT") return AcceptKind::Adaptive;
    throw std::invalid_argument("unknown acceptance kind: " + std::string(text));
}

BacktrackKind parse_backtrack_kind(std::string_view text) {
    const auto s = upper(text);
    if (s == "BR") return BacktrackKind::Random;
    if (s == "BH") return BacktrackKind::Height;
    if (s == "BU") return BacktrackKind::Usage;
    throw std::invalid_argument("unknown backtrack kind: " + std::string(text));
}

void SearchConfig::validate() const {
    if (max_evals < 1) {
        throw std::invalid_argument("SearchConfig: max_evals must be at least 1");
    }
}

std::string SearchConfig::label() const {
    std::string out = "NTS-(";
    out += to_string(step);
    out += ',';
    out += to_string(accept);
    out += ',';
    out += to_string(backtrack);
    out += ')';
    return out;
}

}  // namespace nts
