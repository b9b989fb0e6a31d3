#include "nts/lrp/moves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nts::lrp {

namespace {

using Route = std::vector<int>;

int length(const Solution& s, int r) { return static_cast<int>(s.routes[static_cast<std::size_t>(r)].size()); }

auto at(const Route& route, int i) { return route.begin() + i; }

void insert_segment(const Route& base, int pos, Route::const_iterator first, Route::const_iterator last,
                    bool reversed, Route& out) {
    out.assign(base.begin(), at(base, pos));
    if (reversed) {
        out.insert(out.end(), std::make_reverse_iterator(last), std::make_reverse_iterator(first));
    } else {
        out.insert(out.end(), first, last);
    }
    out.insert(out.end(), at(base, pos), base.end());
}

}  // namespace

std::vector<Move> enumerate_moves(const Solution& s, NeighborhoodId id) {
    const int m = static_cast<int>(s.routes.size());
    std::vector<Move> out;
    switch (id.value) {
        case 1:
            for (int r = 0; r < m; ++r) {
                const int len = length(s, r);
                for (int a = 0; a < len; ++a) {
                    for (int pos = 0; pos < len; ++pos) {
                        if (pos != a) out.push_back({1, r, r, a, 0, 1, pos});
                    }
                }
            }
            break;
        case 2:
            for (int r1 = 0; r1 < m; ++r1) {
                for (int a = 0; a < length(s, r1); ++a) {
                    for (int r2 = 0; r2 < m; ++r2) {
                        if (r2 == r1) continue;
                        for (int pos = 0; pos <= length(s, r2); ++pos) out.push_back({2, r1, r2, a, 0, 1, pos});
                    }
                }
            }
            break;
        case 3:
        case 5:
            for (int r = 0; r < m; ++r) {
                const int len = length(s, r);
                for (int a = 0; a < len; ++a) {
                    for (int b = a + 1; b < len; ++b) out.push_back({id.value, r, r, a, b, 1, 0});
                }
            }
            break;
        case 4:
            for (int r1 = 0; r1 < m; ++r1) {
                for (int r2 = r1 + 1; r2 < m; ++r2) {
                    for (int a = 0; a < length(s, r1); ++a) {
                        for (int b = 0; b < length(s, r2); ++b) out.push_back({4, r1, r2, a, b, 1, 0});
                    }
                }
            }
            break;
        case 6:
            for (int r1 = 0; r1 < m; ++r1) {
                const int len1 = length(s, r1);
                if (len1 == 0) continue;
                for (int r2 = r1 + 1; r2 < m; ++r2) {
                    const int len2 = length(s, r2);
                    if (len2 == 0) continue;
                    for (int a = 0; a <= len1; ++a) {
                        for (int b = 0; b <= len2; ++b) {
                            if (a == len1 && b == len2) continue;  // both tails empty
                            out.push_back({6, r1, r2, a, b, 1, 0});
                        }
                    }
                }
            }
            break;
        case 7:
        case 9:
            for (int r = 0; r < m; ++r) {
                const int len = length(s, r);
                for (int seg = 2; seg <= len - 1; ++seg) {
                    for (int a = 0; a + seg <= len; ++a) {
                        for (int pos = 0; pos <= len - seg; ++pos) {
                            if (pos != a) out.push_back({id.value, r, r, a, 0, seg, pos});
                        }
                    }
                }
            }
            break;
        case 8:
        case 10:
            for (int r1 = 0; r1 < m; ++r1) {
                const int len = length(s, r1);
                for (int seg = 2; seg <= len - 1; ++seg) {
                    for (int a = 0; a + seg <= len; ++a) {
                        for (int r2 = 0; r2 < m; ++r2) {
                            if (r2 == r1) continue;
                            for (int pos = 0; pos <= length(s, r2); ++pos) {
                                out.push_back({id.value, r1, r2, a, 0, seg, pos});
                            }
                        }
                    }
                }
            }
            break;
        case 11:
            for (int r1 = 0; r1 < m; ++r1) {
                if (length(s, r1) == 0) continue;
                for (int r2 = 0; r2 < m; ++r2) {
                    if (length(s, r2) == 0) out.push_back({11, r1, r2, 0, 0, 1, 0});
                }
            }
            break;
        default:
            throw std::invalid_argument("lrp: neighborhood id out of range");
    }
    return out;
}

int edit_routes(const Solution& s, const Move& move, std::vector<int>& first, std::vector<int>& second) {
    const Route& r1 = s.routes[static_cast<std::size_t>(move.r1)];
    const Route& r2 = s.routes[static_cast<std::size_t>(move.r2)];
    switch (move.kind) {
        case 1: {
            first = r1;
            const int client = first[static_cast<std::size_t>(move.a)];
            first.erase(at(first, move.a));
            first.insert(at(first, move.pos), client);
            return 1;
        }
        case 2:
            first = r1;
            first.erase(at(first, move.a));
            second = r2;
            second.insert(at(second, move.pos), r1[static_cast<std::size_t>(move.a)]);
            return 2;
        case 3:
            first = r1;
            std::swap(first[static_cast<std::size_t>(move.a)], first[static_cast<std::size_t>(move.b)]);
            return 1;
        case 4:
            first = r1;
            second = r2;
            std::swap(first[static_cast<std::size_t>(move.a)], second[static_cast<std::size_t>(move.b)]);
            return 2;
        case 5:
            first = r1;
            std::reverse(first.begin() + move.a, first.begin() + move.b + 1);
            return 1;
        case 6:
            first.assign(r1.begin(), at(r1, move.a));
            first.insert(first.end(), at(r2, move.b), r2.end());
            second.assign(r2.begin(), at(r2, move.b));
            second.insert(second.end(), at(r1, move.a), r1.end());
            return 2;
        case 7:
        case 9: {
            Route rest(r1.begin(), at(r1, move.a));
            rest.insert(rest.end(), at(r1, move.a + move.len), r1.end());
            insert_segment(rest, move.pos, at(r1, move.a), at(r1, move.a + move.len), move.kind == 9,
                           first);
            return 1;
        }
        case 8:
        case 10:
            first.assign(r1.begin(), at(r1, move.a));
            first.insert(first.end(), at(r1, move.a + move.len), r1.end());
            insert_segment(r2, move.pos, at(r1, move.a), at(r1, move.a + move.len), move.kind == 10,
                           second);
            return 2;
        case 11:
            first.clear();
            second = r1;
            return 2;
        default:
            break;
    }
    throw std::invalid_argument("lrp: unknown move kind");
}

Solution apply(const Solution& s, const Move& move) {
    Solution out = s;
    std::vector<int> first;
    std::vector<int> second;
    const int touched = edit_routes(s, move, first, second);
    out.routes[static_cast<std::size_t>(move.r1)] = std::move(first);
    if (touched == 2) out.routes[static_cast<std::size_t>(move.r2)] = std::move(second);
    return out;
}

std::vector<Solution> neighbors(const Instance&, const Solution& s, NeighborhoodId id, Order order,
                                Rng* rng) {
    auto moves = enumerate_moves(s, id);
    if (order == Order::Shuffled) {
        if (rng == nullptr) throw std::invalid_argument("lrp::neighbors: shuffled order needs an rng");
        rng->shuffle(std::span<Move>(moves));
    }
    std::vector<Solution> out;
    out.reserve(moves.size());
    for (const auto& move : moves) out.push_back(apply(s, move));
    return out;
}

MoveEvaluator::MoveEvaluator(const Instance& inst, const Solution& s)
    : inst_(&inst), solution_(&s), cost_(s.routes.size()), penalty_(s.routes.size()) {
    for (std::size_t j = 0; j < s.routes.size(); ++j) {
        cost_[j] = depot_cost(inst, j, s.routes[j]);
        penalty_[j] = depot_penalty(inst, j, s.routes[j]);
    }
}

// Sums per-depot terms in depot order, exactly as evaluate() does.
Fitness MoveEvaluator::operator()(const Move& move) const {
    const int touched = edit_routes(*solution_, move, first_, second_);
    const auto r1 = static_cast<std::size_t>(move.r1);
    const auto r2 = static_cast<std::size_t>(move.r2);
    double cost = 0.0;
    double pen = 0.0;
    for (std::size_t j = 0; j < cost_.size(); ++j) {
        if (j == r1) {
            cost += depot_cost(*inst_, j, first_);
        } else if (touched == 2 && j == r2) {
            cost += depot_cost(*inst_, j, second_);
        } else {
            cost += cost_[j];
        }
    }
    for (std::size_t j = 0; j < penalty_.size(); ++j) {
        if (j == r1) {
            pen += depot_penalty(*inst_, j, first_);
        } else if (touched == 2 && j == r2) {
            pen += depot_penalty(*inst_, j, second_);
        } else {
            pen += penalty_[j];
        }
    }
    return cost + pen;
}

}  // namespace nts::lrp
