#include "nts/smtwtp/smtwtp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nts::smtwtp {

namespace {

std::vector<std::pair<int, int>> make_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(neighborhood_size(static_cast<std::size_t>(n), Neighborhood::Swap));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    return pairs;
}

}  // namespace

Instance::Instance(std::vector<std::int64_t> processing, std::vector<std::int64_t> weight,
                   std::vector<std::int64_t> due)
    : processing_(std::move(processing)), weight_(std::move(weight)), due_(std::move(due)) {
    if (processing_.size() != weight_.size() || processing_.size() != due_.size()) {
        throw std::invalid_argument("smtwtp::Instance: p, w and d must have the same length");
    }
    for (std::size_t j = 0; j < processing_.size(); ++j) {
        if (processing_[j] < 1) throw std::invalid_argument("smtwtp::Instance: p_j must be >= 1");
        if (weight_[j] < 0) throw std::invalid_argument("smtwtp::Instance: w_j must be >= 0");
        if (due_[j] < 0) throw std::invalid_argument("smtwtp::Instance: d_j must be >= 0");
    }
}

bool is_valid(const Instance& inst, const Schedule& s) {
    const auto n = inst.size();
    if (s.perm.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (const int job : s.perm) {
        if (job < 0 || static_cast<std::size_t>(job) >= n || seen[static_cast<std::size_t>(job)]) {
            return false;
        }
        seen[static_cast<std::size_t>(job)] = true;
    }
    return true;
}

std::int64_t weighted_tardiness(const Instance& inst, const Schedule& s) {
    const auto p = inst.processing();
    const auto w = inst.weight();
    const auto d = inst.due();
    std::int64_t time = 0;
    std::int64_t total = 0;
    for (const int job : s.perm) {
        const auto j = static_cast<std::size_t>(job);
        time += p[j];
        total += w[j] * std::max<std::int64_t>(0, time - d[j]);
    }
    return total;
}

Schedule random_schedule(const Instance& inst, Rng& rng) {
    Schedule s;
    s.perm.resize(inst.size());
    std::iota(s.perm.begin(), s.perm.end(), 0);
    rng.shuffle(std::span<int>(s.perm));
    return s;
}

Neighborhood neighborhood_from_letter(char c) {
    switch (c) {
        case 'E': case 'e': return Neighborhood::Exchange;
        case 'S': case 's': return Neighborhood::Swap;
        case 'I': case 'i': return Neighborhood::Insert;
        default: break;
    }
    throw std::invalid_argument(std::string("unknown SMTWTP neighborhood letter: ") + c);
}

Schedule apply(const Schedule& s, const Move& move) {
    Schedule out = s;
    auto& perm = out.perm;
    const auto i = static_cast<std::size_t>(move.i);
    const auto j = static_cast<std::size_t>(move.j);
    switch (move.kind) {
        case Neighborhood::Exchange:
        case Neighborhood::Swap:
            std::swap(perm[i], perm[j]);
            break;
        case Neighborhood::Insert:
            if (i < j) {
                std::rotate(perm.begin() + static_cast<std::ptrdiff_t>(i),
                            perm.begin() + static_cast<std::ptrdiff_t>(i + 1),
                            perm.begin() + static_cast<std::ptrdiff_t>(j + 1));
            } else {
                std::rotate(perm.begin() + static_cast<std::ptrdiff_t>(j),
                            perm.begin() + static_cast<std::ptrdiff_t>(i),
                            perm.begin() + static_cast<std::ptrdiff_t>(i + 1));
            }
            break;
    }
    return out;
}

std::size_t neighborhood_size(std::size_t n, Neighborhood kind) {
    if (n < 2) return 0;
    switch (kind) {
        case Neighborhood::Exchange: return n - 1;
        case Neighborhood::Swap: return n * (n - 1) / 2;
        case Neighborhood::Insert: return n * (n - 1);
    }
    return 0;
}

Move MoveList::operator[](std::size_t index) const {
    switch (kind_) {
        case Neighborhood::Exchange: {
            const auto i = static_cast<int>(index);
            return {kind_, i, i + 1};
        }
        case Neighborhood::Swap: {
            const auto& [i, j] = (*pairs_)[index];
            return {kind_, i, j};
        }
        case Neighborhood::Insert: {
            const auto width = static_cast<std::size_t>(n_ - 1);
            const auto from = static_cast<int>(index / width);
            auto to = static_cast<int>(index % width);
            if (to >= from) ++to;
            return {kind_, from, to};
        }
    }
    throw std::logic_error("MoveList: unknown neighborhood");
}

MoveEvaluator::MoveEvaluator(const Instance& inst, const Schedule& s)
    : inst_(&inst), schedule_(&s), completion_(s.perm.size()), prefix_cost_(s.perm.size() + 1, 0) {
    const auto p = inst.processing();
    const auto w = inst.weight();
    const auto d = inst.due();
    std::int64_t time = 0;
    for (std::size_t pos = 0; pos < s.perm.size(); ++pos) {
        const auto j = static_cast<std::size_t>(s.perm[pos]);
        time += p[j];
        completion_[pos] = time;
        prefix_cost_[pos + 1] = prefix_cost_[pos] + w[j] * std::max<std::int64_t>(0, time - d[j]);
    }
}

// Cost of positions [first, last] after the move; completion times outside
// that window are unchanged because the window holds the same set of jobs.
std::int64_t MoveEvaluator::segment_cost(int first, int last, const Move& move) const {
    const auto& perm = schedule_->perm;
    const auto p = inst_->processing();
    const auto w = inst_->weight();
    const auto d = inst_->due();
    std::int64_t time = first > 0 ? completion_[static_cast<std::size_t>(first - 1)] : 0;
    std::int64_t cost = 0;
    for (int pos = first; pos <= last; ++pos) {
        int job;
        if (move.kind == Neighborhood::Insert) {
            if (pos == move.j) {
                job = perm[static_cast<std::size_t>(move.i)];
            } else if (move.i < move.j) {
                job = perm[static_cast<std::size_t>(pos + 1)];
            } else {
                job = perm[static_cast<std::size_t>(pos - 1)];
            }
        } else if (pos == move.i) {
            job = perm[static_cast<std::size_t>(move.j)];
        } else if (pos == move.j) {
            job = perm[static_cast<std::size_t>(move.i)];
        } else {
            job = perm[static_cast<std::size_t>(pos)];
        }
        const auto j = static_cast<std::size_t>(job);
        time += p[j];
        cost += w[j] * std::max<std::int64_t>(0, time - d[j]);
    }
    return cost;
}

Fitness MoveEvaluator::operator()(const Move& move) const {
    const int first = std::min(move.i, move.j);
    const int last = std::max(move.i, move.j);
    const auto n = prefix_cost_.size() - 1;
    const std::int64_t before = prefix_cost_[static_cast<std::size_t>(first)];
    const std::int64_t after = prefix_cost_[n] - prefix_cost_[static_cast<std::size_t>(last + 1)];
    return static_cast<Fitness>(before + segment_cost(first, last, move) + after);
}

std::vector<Schedule> neighbors(const Instance& inst, const Schedule& s, Neighborhood kind,
                                Order order, Rng* rng) {
    const auto pairs = make_pairs(static_cast<int>(inst.size()));
    const MoveList moves(kind, static_cast<int>(inst.size()), &pairs);
    std::vector<std::size_t> index(moves.size());
    std::iota(index.begin(), index.end(), std::size_t{0});
    if (order == Order::Shuffled) {
        if (rng == nullptr) throw std::invalid_argument("smtwtp::neighbors: shuffled order needs an rng");
        rng->shuffle(std::span<std::size_t>(index));
    }
    std::vector<Schedule> out;
    out.reserve(index.size());
    for (const auto i : index) out.push_back(apply(s, moves[i]));
    return out;
}

Adapter::Adapter(Instance inst)
    : inst_(std::move(inst)), swap_pairs_(make_pairs(static_cast<int>(inst_.size()))) {}

MoveList Adapter::moves(const Schedule&, NeighborhoodId id) const {
    if (id.value < 1 || id.value > 3) throw std::invalid_argument("smtwtp: neighborhood id out of range");
    return MoveList(static_cast<Neighborhood>(id.value), static_cast<int>(inst_.size()), &swap_pairs_);
}

}  // namespace nts::smtwtp
