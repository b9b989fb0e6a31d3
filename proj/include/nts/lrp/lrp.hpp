#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nts/core/rng.hpp"
#include "nts/core/types.hpp"

/// Location routing with capacitated depots and one uncapacitated vehicle
/// per depot.
namespace nts::lrp {

enum class Rounding { None, NearestInteger };

/// Clients are 0..n-1; depot j is travel node n + j.
class Instance {
public:
    /// `travel` is the row-major (n+m)x(n+m) cost matrix; it must be
    /// symmetric with a zero diagonal.
    Instance(std::vector<double> demand, std::vector<double> capacity,
             std::vector<double> opening_cost, std::vector<double> travel, double alpha,
             Rounding rounding = Rounding::None);

    /// 10 x the largest travel cost, so any overload outweighs routing savings.
    static double default_alpha(std::span<const double> travel);

    std::size_t clients() const { return demand_.size(); }
    std::size_t depots() const { return capacity_.size(); }
    std::size_t nodes() const { return demand_.size() + capacity_.size(); }
    std::size_t depot_node(std::size_t depot) const { return clients() + depot; }

    double demand(std::size_t client) const { return demand_[client]; }
    double capacity(std::size_t depot) const { return capacity_[depot]; }
    double opening_cost(std::size_t depot) const { return opening_cost_[depot]; }
    double travel(std::size_t a, std::size_t b) const { return travel_[a * nodes() + b]; }
    std::span<const double> travel_matrix() const { return travel_; }
    double alpha() const { return alpha_; }
    Rounding rounding() const { return rounding_; }

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<double> demand_;
    std::vector<double> capacity_;
    std::vector<double> opening_cost_;
    std::vector<double> travel_;
    double alpha_;
    Rounding rounding_;
};

/// One ordered client route per depot; a depot is open iff its route is
/// nonempty.
struct Solution {
    std::vector<std::vector<int>> routes;

    bool is_open(std::size_t depot) const { return !routes[depot].empty(); }
    std::size_t open_count() const;

    friend bool operator==(const Solution&, const Solution&) = default;
};

/// Throws std::invalid_argument unless every client is served exactly once
/// by one of the instance's depots.
void validate(const Instance& inst, const Solution& s);
Solution make_solution(const Instance& inst, std::vector<std::vector<int>> routes);

/// depot -> first -> ... -> last -> depot; zero for an empty route.
double tour_cost(const Instance& inst, std::size_t depot, std::span<const int> route);
double route_load(const Instance& inst, std::span<const int> route);

/// Opening cost plus tour cost of one depot; zero when closed.
double depot_cost(const Instance& inst, std::size_t depot, std::span<const int> route);
/// alpha * max(0, load - capacity) for one depot.
double depot_penalty(const Instance& inst, std::size_t depot, std::span<const int> route);

Fitness routing_and_opening_cost(const Instance& inst, const Solution& s);
Fitness penalty(const Instance& inst, const Solution& s);
/// routing_and_opening_cost + penalty.
Fitness evaluate(const Instance& inst, const Solution& s);
bool is_feasible(const Instance& inst, const Solution& s);

/// Each client on a uniformly drawn depot, each route uniformly shuffled.
Solution random_solution(const Instance& inst, Rng& rng);

}  // namespace nts::lrp
