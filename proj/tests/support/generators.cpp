#include "generators.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>

#include "nts/smtwtp/io.hpp"

namespace nts::testing {

namespace {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
}

std::optional<std::string> slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

lrp::Instance from_points(const std::vector<std::pair<double, double>>& xy, std::vector<double> demand,
                          std::vector<double> capacity, std::vector<double> opening, bool round) {
    const std::size_t size = xy.size();
    std::vector<double> travel(size * size);
    for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = 0; b < size; ++b) {
            double d = std::hypot(xy[a].first - xy[b].first, xy[a].second - xy[b].second);
            if (round) d = std::round(d);
            travel[a * size + b] = d;
        }
    }
    const double alpha = lrp::Instance::default_alpha(travel);
    return lrp::Instance(std::move(demand), std::move(capacity), std::move(opening), std::move(travel), alpha,
                         round ? lrp::Rounding::NearestInteger : lrp::Rounding::None);
}

}  // namespace

smtwtp::Instance random_smtwtp(Rng& rng, std::size_t n, std::int64_t pmax, std::int64_t wmax, std::int64_t dmax) {
    std::vector<std::int64_t> p(n), w(n), d(n);
    for (std::size_t j = 0; j < n; ++j) {
        p[j] = uniform_int(rng, 1, pmax);
        w[j] = uniform_int(rng, 0, wmax);
        d[j] = uniform_int(rng, 0, dmax);
    }
    return smtwtp::Instance(std::move(p), std::move(w), std::move(d));
}

std::vector<smtwtp::Instance> surrogate_orlib(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const double levels[] = {0.2, 0.4, 0.6, 0.8, 1.0};
    std::vector<smtwtp::Instance> out;
    for (const double tf : levels) {
        for (const double rdd : levels) {
            for (int copy = 0; copy < 5; ++copy) {
                std::vector<std::int64_t> p(n), w(n), d(n);
                for (std::size_t j = 0; j < n; ++j) {
                    p[j] = uniform_int(rng, 1, 100);
                    w[j] = uniform_int(rng, 1, 10);
                }
                const double total = static_cast<double>(std::accumulate(p.begin(), p.end(), std::int64_t{0}));
                const auto lo = static_cast<std::int64_t>(std::max(0.0, std::ceil(total * (1.0 - tf - rdd / 2.0))));
                const auto hi = static_cast<std::int64_t>(std::floor(total * (1.0 - tf + rdd / 2.0)));
                for (std::size_t j = 0; j < n; ++j) d[j] = uniform_int(rng, lo, std::max(lo, hi));
                out.emplace_back(std::move(p), std::move(w), std::move(d));
            }
        }
    }
    return out;
}

std::optional<OrlibSet> load_orlib(std::size_t n) {
    const char* env = std::getenv("NTS_ORLIB_DIR");
    if (env == nullptr || *env == '\0') return std::nullopt;
    const std::filesystem::path dir(env);
    const auto tag = std::to_string(n);
    const auto text = slurp(dir / ("wt" + tag + ".txt"));
    if (!text) return std::nullopt;
    OrlibSet set;
    set.instances = smtwtp::parse_orlib(*text, n);
    set.source = (dir / ("wt" + tag + ".txt")).string();
    for (const auto& name : {"wt" + tag + "opt.txt", "wtopt" + tag + ".txt"}) {
        if (const auto optima = slurp(dir / name)) {
            set.optima = smtwtp::load_optima(*optima);
            break;
        }
    }
    return set;
}

lrp::Instance random_lrp(Rng& rng, const LrpShape& shape) {
    const std::size_t size = shape.clients + shape.depots;
    std::vector<std::pair<double, double>> xy(size);
    const auto side = static_cast<std::int64_t>(shape.side);
    for (auto& point : xy) {
        point = {static_cast<double>(uniform_int(rng, 0, side)), static_cast<double>(uniform_int(rng, 0, side))};
    }
    std::vector<double> demand(shape.clients);
    double total = 0.0;
    for (auto& q : demand) {
        q = static_cast<double>(uniform_int(rng, 1, static_cast<std::int64_t>(shape.demand_max)));
        total += q;
    }
    std::vector<double> capacity(shape.depots);
    std::vector<double> opening(shape.depots);
    const double each = std::ceil(shape.capacity_slack * total / static_cast<double>(shape.depots));
    for (std::size_t j = 0; j < shape.depots; ++j) {
        capacity[j] = each;
        opening[j] = static_cast<double>(uniform_int(rng, static_cast<std::int64_t>(shape.opening_min),
                                                     static_cast<std::int64_t>(shape.opening_max)));
    }
    return from_points(xy, std::move(demand), std::move(capacity), std::move(opening), true);
}

lrp::Instance tiny_lrp(Rng& rng, std::size_t clients, std::size_t depots) {
    std::vector<std::pair<double, double>> xy(clients + depots);
    for (auto& point : xy) point = {10.0 * rng.uniform01(), 10.0 * rng.uniform01()};
    std::vector<double> demand(clients);
    for (auto& q : demand) q = 1.0 + static_cast<double>(rng.below(5));
    std::vector<double> capacity(depots);
    std::vector<double> opening(depots);
    for (std::size_t j = 0; j < depots; ++j) {
        capacity[j] = 2.0 + static_cast<double>(rng.below(8));
        opening[j] = static_cast<double>(rng.below(20));
    }
    return from_points(xy, std::move(demand), std::move(capacity), std::move(opening), false);
}

}  // namespace nts::testing
