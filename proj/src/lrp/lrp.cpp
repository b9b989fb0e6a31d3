#include "nts/lrp/lrp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nts::lrp {

Instance::Instance(std::vector<double> demand, std::vector<double> capacity,
                   std::vector<double> opening_cost, std::vector<double> travel_costs, double alpha,
                   Rounding rounding)
    : demand_(std::move(demand)),
      capacity_(std::move(capacity)),
      opening_cost_(std::move(opening_cost)),
      travel_(std::move(travel_costs)),
      alpha_(alpha),
      rounding_(rounding) {
    if (capacity_.empty()) throw std::invalid_argument("lrp::Instance: at least one depot required");
    if (opening_cost_.size() != capacity_.size()) {
        throw std::invalid_argument("lrp::Instance: capacity and opening cost sizes differ");
    }
    const auto size = nodes();
    if (travel_.size() != size * size) {
        throw std::invalid_argument("lrp::Instance: travel matrix must be (n+m)x(n+m)");
    }
    for (const double d : demand_) {
        if (!(d >= 0.0) || !std::isfinite(d)) throw std::invalid_argument("lrp::Instance: negative demand");
    }
    for (std::size_t j = 0; j < capacity_.size(); ++j) {
        if (!(capacity_[j] >= 0.0) || !(opening_cost_[j] >= 0.0)) {
            throw std::invalid_argument("lrp::Instance: negative capacity or opening cost");
        }
    }
    for (std::size_t a = 0; a < size; ++a) {
        if (travel(a, a) != 0.0) throw std::invalid_argument("lrp::Instance: nonzero travel diagonal");
        for (std::size_t b = a + 1; b < size; ++b) {
            if (!(travel(a, b) >= 0.0) || !std::isfinite(travel(a, b))) {
                throw std::invalid_argument("lrp::Instance: travel costs must be finite and non-negative");
            }
            if (travel(a, b) != travel(b, a)) {
                throw std::invalid_argument("lrp::Instance: travel matrix is not symmetric at (" +
                                            std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
            }
        }
    }
    if (!(alpha_ > 0.0) || !std::isfinite(alpha_)) {
        throw std::invalid_argument("lrp::Instance: alpha must be positive");
    }
}

double Instance::default_alpha(std::span<const double> travel) {
    double largest = 0.0;
    for (const double t : travel) largest = std::max(largest, t);
    return largest > 0.0 ? 10.0 * largest : 1.0;
}

std::size_t Solution::open_count() const {
    return static_cast<std::size_t>(
        std::count_if(routes.begin(), routes.end(), [](const auto& r) { return !r.empty(); }));
}

void validate(const Instance& inst, const Solution& s) {
    if (s.routes.size() != inst.depots()) {
        throw std::invalid_argument("lrp::Solution: one route per depot required");
    }
    std::vector<int> served(inst.clients(), 0);
    for (const auto& route : s.routes) {
        for (const int c : route) {
            if (c < 0 || static_cast<std::size_t>(c) >= inst.clients()) {
                throw std::invalid_argument("lrp::Solution: unknown client " + std::to_string(c));
            }
            if (++served[static_cast<std::size_t>(c)] > 1) {
                throw std::invalid_argument("lrp::Solution: client " + std::to_string(c) +
                                            " served twice");
            }
        }
    }
    for (std::size_t c = 0; c < served.size(); ++c) {
        if (served[c] == 0) {
            throw std::invalid_argument("lrp::Solution: client " + std::to_string(c) + " unassigned");
        }
    }
}

Solution make_solution(const Instance& inst, std::vector<std::vector<int>> routes) {
    Solution s{std::move(routes)};
    validate(inst, s);
    return s;
}

double tour_cost(const Instance& inst, std::size_t depot, std::span<const int> route) {
    if (route.empty()) return 0.0;
    const auto home = inst.depot_node(depot);
    double cost = inst.travel(home, static_cast<std::size_t>(route.front()));
    for (std::size_t i = 1; i < route.size(); ++i) {
        cost += inst.travel(static_cast<std::size_t>(route[i - 1]), static_cast<std::size_t>(route[i]));
    }
    cost += inst.travel(static_cast<std::size_t>(route.back()), home);
    return cost;
}

double route_load(const Instance& inst, std::span<const int> route) {
    double load = 0.0;
    for (const int c : route) load += inst.demand(static_cast<std::size_t>(c));
    return load;
}

double depot_cost(const Instance& inst, std::size_t depot, std::span<const int> route) {
    if (route.empty()) return 0.0;
    return inst.opening_cost(depot) + tour_cost(inst, depot, route);
}

double depot_penalty(const Instance& inst, std::size_t depot, std::span<const int> route) {
    return inst.alpha() * std::max(0.0, route_load(inst, route) - inst.capacity(depot));
}

Fitness routing_and_opening_cost(const Instance& inst, const Solution& s) {
    double total = 0.0;
    for (std::size_t j = 0; j < s.routes.size(); ++j) total += depot_cost(inst, j, s.routes[j]);
    return total;
}

Fitness penalty(const Instance& inst, const Solution& s) {
    double total = 0.0;
    for (std::size_t j = 0; j < s.routes.size(); ++j) total += depot_penalty(inst, j, s.routes[j]);
    return total;
}

Fitness evaluate(const Instance& inst, const Solution& s) {
    return routing_and_opening_cost(inst, s) + penalty(inst, s);
}

bool is_feasible(const Instance& inst, const Solution& s) { return penalty(inst, s) == 0.0; }

Solution random_solution(const Instance& inst, Rng& rng) {
    Solution s;
    s.routes.resize(inst.depots());
    for (std::size_t c = 0; c < inst.clients(); ++c) {
        s.routes[rng.below(inst.depots())].push_back(static_cast<int>(c));
    }
    for (auto& route : s.routes) rng.shuffle(std::span<int>(route));
    return s;
}

}  // namespace nts::lrp
