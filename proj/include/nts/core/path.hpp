#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nts/core/types.hpp"

namespace nts {

/// Which of the k neighborhoods have already been explored from a solution.
class UsageMask {
public:
    static constexpr int kMaxNeighborhoods = 64;

    explicit UsageMask(int k) : k_(k) {
        if (k < 1 || k > kMaxNeighborhoods) {
            throw std::invalid_argument("UsageMask: neighborhood count out of range");
        }
    }

    int size() const { return k_; }
    bool used(NeighborhoodId id) const { return (bits_ >> id.index()) & 1U; }
    void mark(NeighborhoodId id) { bits_ |= std::uint64_t{1} << id.index(); }
    int used_count() const { return std::popcount(bits_); }
    int unused_count() const { return k_ - used_count(); }
    bool all_used() const { return used_count() == k_; }

    friend bool operator==(const UsageMask&, const UsageMask&) = default;

private:
    int k_;
    std::uint64_t bits_ = 0;
};

template <class Solution>
struct PathEntry {
    Solution solution;
    Fitness fitness;
    UsageMask usage;
    /// Best fitness produced by a step from this entry; starts at `fitness`.
    Fitness best_child_fitness;
    /// 1-based position in the path.
    std::size_t depth;
};

/// Trajectory of accepted solutions; the head is the last entry.
template <class Solution>
class TrajectoryPath {
public:
    using Entry = PathEntry<Solution>;

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    Entry& head() { return entries_.back(); }
    const Entry& head() const { return entries_.back(); }
    const Entry& operator[](std::size_t i) const { return entries_[i]; }
    Entry& operator[](std::size_t i) { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    void push(Solution solution, Fitness fitness, int k) {
        const std::size_t depth = entries_.size() + 1;
        entries_.push_back(Entry{std::move(solution), fitness, UsageMask(k), fitness, depth});
    }

    /// Drops every entry after position `index` (0-based), which becomes the head.
    void truncate_after(std::size_t index) {
        entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(index + 1), entries_.end());
    }

    void clear() { entries_.clear(); }

private:
    std::vector<Entry> entries_;
};

}  // namespace nts
