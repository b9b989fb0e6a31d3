#include <gtest/gtest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "nts/core/config.hpp"
#include "nts/core/format.hpp"
#include "nts/core/path.hpp"
#include "nts/core/rng.hpp"
#include "nts/core/strategies.hpp"
#include "properties.hpp"
#include "stats.hpp"

using namespace nts;

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        differs |= x != c.next();
    }
    EXPECT_TRUE(differs);
}

TEST(Rng, MatchesStandardEngine) {
    // 10000th output of a default-seeded mt19937_64, fixed by the standard.
    Rng rng(5489);
    std::uint64_t x = 0;
    for (int i = 0; i < 10000; ++i) x = rng.next();
    EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(Rng, BelowStaysInRangeAndIsUniform) {
    Rng rng(1);
    std::vector<std::uint64_t> counts(7, 0);
    for (int i = 0; i < 70000; ++i) {
        const auto v = rng.below(7);
        ASSERT_LT(v, 7U);
        ++counts[v];
    }
    const auto chi = nts::testing::chi_square_uniform(counts);
    EXPECT_TRUE(chi.passes) << chi.describe();
    EXPECT_THROW(rng.below(0), std::invalid_argument);
    EXPECT_EQ(rng.below(1), 0U);
}

TEST(Rng, Uniform01AndBernoulli) {
    Rng rng(2);
    int hits = 0;
    for (int i = 0; i < 20000; ++i) {
        const double u = rng.uniform01();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
        hits += rng.bernoulli(0.3);
    }
    EXPECT_NEAR(hits / 20000.0, 0.3, 0.02);
    EXPECT_TRUE(rng.bernoulli(1.0));
    EXPECT_FALSE(rng.bernoulli(0.0));
}

TEST(Rng, ShuffleIsUniformOverPermutations) {
    Rng rng(3);
    std::map<std::vector<int>, std::uint64_t> seen;
    for (int i = 0; i < 6000; ++i) {
        std::vector<int> v = {0, 1, 2};
        rng.shuffle(std::span<int>(v));
        ++seen[v];
    }
    ASSERT_EQ(seen.size(), 6U);
    std::vector<std::uint64_t> counts;
    for (const auto& [perm, count] : seen) counts.push_back(count);
    EXPECT_TRUE(nts::testing::chi_square_uniform(counts).passes);
}

TEST(Config, LabelsAndParsing) {
    SearchConfig config;
    EXPECT_EQ(config.label(), "NTS-(FD,AA,BR)");
    config.step = parse_step_kind("fi");
    config.accept = parse_accept_kind("AT");
    config.backtrack = parse_backtrack_kind("Bu");
    EXPECT_EQ(config.label(), "NTS-(FI,AT,BU)");
    EXPECT_THROW(parse_step_kind("xx"), std::invalid_argument);
    EXPECT_THROW(parse_accept_kind(""), std::invalid_argument);
    EXPECT_THROW(parse_backtrack_kind("bz"), std::invalid_argument);
    config.max_evals = 0;
    EXPECT_THROW(config.validate(), std::invalid_argument);
}

TEST(Config, TerminationNames) {
    EXPECT_EQ(to_string(Termination::PathEmpty), "PATH_EMPTY");
    EXPECT_EQ(to_string(Termination::BudgetExhausted), "BUDGET_EXHAUSTED");
    EXPECT_EQ(parse_termination("BUDGET_EXHAUSTED"), Termination::BudgetExhausted);
    EXPECT_THROW(parse_termination("DONE"), std::invalid_argument);
}

TEST(Format, SeventeenSignificantDigits) {
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(format_real(1701.0), "1701");
    EXPECT_EQ(std::stod(format_real(2.0 / 3.0)), 2.0 / 3.0);
}

TEST(UsageMask, MarksAndCounts) {
    UsageMask mask(3);
    EXPECT_EQ(mask.unused_count(), 3);
    mask.mark(NeighborhoodId{2});
    EXPECT_TRUE(mask.used(NeighborhoodId{2}));
    EXPECT_FALSE(mask.used(NeighborhoodId{1}));
    mask.mark(NeighborhoodId{2});
    EXPECT_EQ(mask.used_count(), 1);
    mask.mark(NeighborhoodId{1});
    mask.mark(NeighborhoodId{3});
    EXPECT_TRUE(mask.all_used());
    EXPECT_THROW(UsageMask(0), std::invalid_argument);
    EXPECT_THROW(UsageMask(65), std::invalid_argument);
}

TEST(TrajectoryPath, DepthsAndTruncation) {
    TrajectoryPath<int> path;
    for (int i = 0; i < 4; ++i) path.push(i, 10.0 - i, 2);
    for (std::size_t i = 0; i < path.size(); ++i) {
        EXPECT_EQ(path[i].depth, i + 1);
        EXPECT_EQ(path[i].best_child_fitness, path[i].fitness);
    }
    path[1].usage.mark(NeighborhoodId{1});
    path.truncate_after(1);
    ASSERT_EQ(path.size(), 2U);
    EXPECT_EQ(path.head().solution, 1);
    EXPECT_TRUE(path.head().usage.used(NeighborhoodId{1}));
    path.push(9, 1.0, 2);
    EXPECT_EQ(path.head().depth, 3U);
}

TEST(SelectNeighborhood, SingleCandidate) {
    Rng rng(4);
    UsageMask mask(3);
    mask.mark(NeighborhoodId{1});
    mask.mark(NeighborhoodId{2});
    for (int i = 0; i < 50; ++i) EXPECT_EQ(select_neighborhood(mask, rng).value, 3);
    UsageMask two(2);
    two.mark(NeighborhoodId{2});
    for (int i = 0; i < 50; ++i) EXPECT_EQ(select_neighborhood(two, rng).value, 1);
}

TEST(SelectNeighborhood, AllUsedIsAContractViolation) {
    Rng rng(5);
    UsageMask mask(1);
    mask.mark(NeighborhoodId{1});
    EXPECT_THROW(select_neighborhood(mask, rng), std::logic_error);
}

TEST(SelectNeighborhood, Property_UniformOverUnused) {
    const auto result = nts::testing::check_selection_uniformity(10000);
    EXPECT_TRUE(result.ok) << result.detail;
}

TEST(DecideAccept, ImproveCurrent) {
    Rng rng(6);
    EXPECT_TRUE(decide_accept(AcceptKind::ImproveCurrent, 10.0, 10.0, 3, 9.0, rng));
    EXPECT_FALSE(decide_accept(AcceptKind::ImproveCurrent, 10.0, 10.0, 3, 10.0, rng));
    EXPECT_FALSE(decide_accept(AcceptKind::ImproveCurrent, 10.0, 10.0, 3, 11.0, rng));
}

TEST(DecideAccept, ImproveBestChildUsesValueBeforeUpdate) {
    Rng rng(7);
    EXPECT_TRUE(decide_accept(AcceptKind::ImproveBestChild, 10.0, 8.0, 2, 7.0, rng));
    EXPECT_FALSE(decide_accept(AcceptKind::ImproveBestChild, 10.0, 8.0, 2, 8.0, rng));
    EXPECT_FALSE(decide_accept(AcceptKind::ImproveBestChild, 10.0, 8.0, 2, 9.0, rng));
}

TEST(DecideAccept, AdaptiveAtRootIsCertain) {
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(decide_accept(AcceptKind::Adaptive, 10.0, 8.0, 1, 7.0, rng));
        EXPECT_TRUE(decide_accept(AcceptKind::Adaptive, 10.0, 8.0, 1, 9.0, rng));
        EXPECT_FALSE(decide_accept(AcceptKind::Adaptive, 10.0, 8.0, 1, 10.0, rng));
    }
}

TEST(DecideAccept, AdaptiveFrequencyAtDepthFour) {
    Rng rng(9);
    int accepted = 0;
    for (int i = 0; i < 10000; ++i) accepted += decide_accept(AcceptKind::Adaptive, 10.0, 8.0, 4, 9.0, rng);
    EXPECT_NEAR(accepted / 10000.0, 0.25, 0.02);
}

TEST(DecideAccept, EntryOverload) {
    Rng rng(10);
    TrajectoryPath<int> path;
    path.push(0, 10.0, 2);
    EXPECT_TRUE(decide_accept(AcceptKind::ImproveCurrent, path.head(), 9.0, rng));
}

TEST(Backtrack, SingleCandidateKeepsUsage) {
    for (const auto kind : {BacktrackKind::Random, BacktrackKind::Height, BacktrackKind::Usage}) {
        Rng rng(11);
        TrajectoryPath<int> path;
        for (int i = 0; i < 3; ++i) path.push(i, 5.0 - i, 2);
        path[0].usage.mark(NeighborhoodId{2});
        for (std::size_t i = 1; i < 3; ++i) {
            path[i].usage.mark(NeighborhoodId{1});
            path[i].usage.mark(NeighborhoodId{2});
        }
        backtrack(path, kind, rng);
        ASSERT_EQ(path.size(), 1U);
        EXPECT_EQ(path.head().solution, 0);
        EXPECT_TRUE(path.head().usage.used(NeighborhoodId{2}));
        EXPECT_FALSE(path.head().usage.used(NeighborhoodId{1}));
    }
}

TEST(Backtrack, AllExploredEmptiesPath) {
    Rng rng(12);
    TrajectoryPath<int> path;
    for (int i = 0; i < 3; ++i) {
        path.push(i, 5.0 - i, 1);
        path.head().usage.mark(NeighborhoodId{1});
    }
    backtrack(path, BacktrackKind::Random, rng);
    EXPECT_TRUE(path.empty());
}

TEST(Backtrack, HeadWithUnusedIsAContractViolation) {
    Rng rng(13);
    TrajectoryPath<int> path;
    path.push(0, 1.0, 2);
    EXPECT_THROW(backtrack(path, BacktrackKind::Random, rng), std::logic_error);
}

TEST(Backtrack, UsageTournamentStrictOrder) {
    // Candidates with used counts {1, 2}: both are always drawn, the
    // count-1 entry always wins.
    Rng rng(14);
    const std::vector<BacktrackCandidate> candidates = {{0, 2}, {1, 1}};
    for (int i = 0; i < 200; ++i) {
        EXPECT_EQ(pick_backtrack_target(candidates, BacktrackKind::Usage, rng), std::optional<std::size_t>(1));
        EXPECT_EQ(pick_backtrack_target(candidates, BacktrackKind::Height, rng), std::optional<std::size_t>(0));
    }
    EXPECT_FALSE(pick_backtrack_target({}, BacktrackKind::Random, rng).has_value());
}

TEST(Backtrack, Property_TargetDistributions) {
    const auto result = nts::testing::check_random_backtrack_uniformity(10000);
    EXPECT_TRUE(result.ok) << result.detail;
}
