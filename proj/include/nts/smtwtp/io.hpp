#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nts/smtwtp/smtwtp.hpp"

namespace nts::smtwtp {

inline constexpr std::size_t kOrlibInstanceCount = 125;

/// Parses an OR-Library wt-file: 125 instances, each written as n
/// processing times, n weights, then n due dates. n must be 40, 50 or 100.
/// Throws ParseError carrying the offending token offset.
std::vector<Instance> parse_orlib(std::string_view text, std::size_t n);

/// Inverse of parse_orlib for any number of equally sized instances.
std::string format_orlib(std::span<const Instance> instances);

/// 125 known optimal objective values, in instance order.
std::vector<std::int64_t> load_optima(std::string_view text);

/// Single instance: "n" on the first line, then lines of p, w and d.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

}  // namespace nts::smtwtp
