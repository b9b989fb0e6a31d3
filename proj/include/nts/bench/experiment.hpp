#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nts/core/config.hpp"
#include "nts/core/types.hpp"
#include "nts/lrp/lrp.hpp"
#include "nts/smtwtp/smtwtp.hpp"

namespace nts::bench {

enum class ProblemKind { Smtwtp, Lrp };
enum class Algorithm { Nts, Vnd, VndRestart, Vns };

ProblemKind parse_problem_kind(std::string_view text);
Algorithm parse_algorithm(std::string_view text);
std::string_view to_string(ProblemKind kind);
std::string_view to_string(Algorithm algorithm);

/// Neighborhood ordering: SMTWTP accepts letters ("ESI"); both problems
/// accept comma-separated 1-based ids ("1,3,2").
std::vector<NeighborhoodId> parse_ordering(ProblemKind problem, std::string_view text);

/// Named instances of one problem, in load order.
struct InstanceSet {
    ProblemKind kind = ProblemKind::Smtwtp;
    std::vector<std::string> ids;
    std::vector<smtwtp::Instance> smtwtp;
    std::vector<lrp::Instance> lrp;

    std::size_t size() const { return ids.size(); }
};

/// A directory loads every instance file in it (sorted by name; ".lrp" files
/// for LRP). A file loads either an OR-Library wt-file (ids "1".."125") or a
/// single canonical instance named after the file stem.
InstanceSet load_instances(ProblemKind kind, const std::filesystem::path& path);

struct ExperimentSpec {
    ProblemKind problem = ProblemKind::Smtwtp;
    std::filesystem::path instances;
    Algorithm algorithm = Algorithm::Nts;
    StepKind step = StepKind::FirstDescent;
    AcceptKind accept = AcceptKind::ImproveCurrent;
    BacktrackKind backtrack = BacktrackKind::Random;
    /// VND ordering / VNS descent order. Empty means 1..k (SMTWTP: "ESI").
    std::vector<NeighborhoodId> ordering;
    std::size_t trials = 1;
    std::uint64_t base_seed = 0;
    std::uint64_t max_evals = 10'000'000;
    /// Overrides the generated algorithm label when nonempty.
    std::string label;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned workers = 0;

    void validate() const;
    std::string algorithm_label() const;
};

struct TrialRow {
    std::string instance;
    std::string algorithm;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    Fitness best_fitness = 0.0;
    std::uint64_t evals_to_best = 0;
    std::uint64_t evals_total = 0;
    std::uint64_t h_max = 1;
    bool feasible = true;
    Termination termination = Termination::PathEmpty;
    std::vector<TracePoint> trace;

    friend bool operator==(const TrialRow&, const TrialRow&) = default;
};

/// trials x instances rows, instance-major. Trial t runs with seed
/// base_seed + t; rows do not depend on the worker count.
std::vector<TrialRow> run_experiment(const ExperimentSpec& spec, const InstanceSet& instances);
std::vector<TrialRow> run_experiment(const ExperimentSpec& spec);

}  // namespace nts::bench
