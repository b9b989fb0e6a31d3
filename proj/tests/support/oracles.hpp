#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nts/lrp/lrp.hpp"
#include "nts/smtwtp/smtwtp.hpp"

namespace nts::testing {

/// Weighted tardiness by running the machine one time unit at a time and
/// charging w_j for every unit job j is still unfinished after d_j.
std::int64_t timeline_tardiness(std::span<const std::int64_t> p, std::span<const std::int64_t> w,
                                std::span<const std::int64_t> d, std::span<const int> perm);

/// Minimum weighted tardiness over all n! schedules.
std::int64_t exhaustive_optimum(const smtwtp::Instance& inst);

/// Neighbors built directly from the move definitions (positions, not
/// move records), in no particular order.
std::vector<std::vector<int>> naive_exchange(const std::vector<int>& perm);
std::vector<std::vector<int>> naive_swap(const std::vector<int>& perm);
std::vector<std::vector<int>> naive_insert(const std::vector<int>& perm);

/// LRP objective walked node by node over an explicit closed tour.
double naive_lrp_cost(const lrp::Instance& inst, const std::vector<std::vector<int>>& routes);

/// Naive LRP neighborhoods for the kinds with a simple independent
/// definition: 1, 2, 3, 4, 5 and 11.
std::vector<std::vector<std::vector<int>>> naive_lrp_neighbors(const std::vector<std::vector<int>>& routes, int kind);

}  // namespace nts::testing
