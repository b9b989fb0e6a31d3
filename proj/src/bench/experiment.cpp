#include "nts/bench/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nts/core/errors.hpp"
#include "nts/core/nts.hpp"
#include "nts/core/vnd.hpp"
#include "nts/lrp/io.hpp"
#include "nts/lrp/moves.hpp"
#include "nts/smtwtp/io.hpp"

namespace nts::bench {

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_tokens(std::string_view text) {
    std::size_t count = 0;
    bool in_token = false;
    for (const char c : text) {
        const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!space && !in_token) ++count;
        in_token = !space;
    }
    return count;
}

void add_smtwtp_file(InstanceSet& set, const std::filesystem::path& path, bool single_only) {
    const auto text = read_file(path);
    const auto tokens = count_tokens(text);
    const std::size_t per_n = smtwtp::kOrlibInstanceCount * 3;
    const std::size_t n = tokens % per_n == 0 ? tokens / per_n : 0;
    if (!single_only && (n == 40 || n == 50 || n == 100)) {
        auto instances = smtwtp::parse_orlib(text, n);
        for (std::size_t i = 0; i < instances.size(); ++i) {
            set.ids.push_back(std::to_string(i + 1));
            set.smtwtp.push_back(std::move(instances[i]));
        }
        return;
    }
    set.ids.push_back(path.stem().string());
    set.smtwtp.push_back(smtwtp::parse_instance(text));
}

std::vector<NeighborhoodId> default_ordering(int k) {
    std::vector<NeighborhoodId> ids;
    for (int i = 1; i <= k; ++i) ids.push_back(NeighborhoodId{i});
    return ids;
}

template <class Adapter>
TrialRow run_trial(const Adapter& adapter, const ExperimentSpec& spec, std::uint64_t seed,
                   std::size_t problem_size) {
    Rng rng(seed);
    const int k = adapter.neighborhood_count();
    const auto ordering = spec.ordering.empty() ? default_ordering(k) : spec.ordering;

    RunRecord<typename Adapter::Solution> record{adapter.random_solution(rng)};
    rng = Rng(seed);
    switch (spec.algorithm) {
        case Algorithm::Nts: {
            SearchConfig config{spec.step, spec.accept, spec.backtrack, spec.max_evals, seed};
            record = run_nts(adapter, config, rng);
            break;
        }
        case Algorithm::Vnd:
        case Algorithm::VndRestart:
            record = run_vnd(adapter, std::span<const NeighborhoodId>(ordering), spec.step, spec.max_evals,
                             spec.algorithm == Algorithm::VndRestart, rng);
            break;
        case Algorithm::Vns: {
            VnsConfig config;
            config.step = spec.step;
            config.max_evals = spec.max_evals;
            config.max_shake = static_cast<int>(problem_size);
            if (spec.problem == ProblemKind::Lrp && spec.ordering.empty()) {
                config.groups = {{{1}, {2}}, {{3}, {4}}, {{5}, {6}}, {{7}, {8}}, {{9}, {10}}, {{11}}};
                config.shake_ids = {{1}, {2}, {11}};
            } else {
                for (const auto id : ordering) config.groups.push_back({id});
                config.shake_ids = default_ordering(k);
            }
            record = run_vns(adapter, config, rng);
            break;
        }
    }

    TrialRow row;
    row.seed = seed;
    row.best_fitness = record.best_fitness;
    row.evals_to_best = record.evals_to_best;
    row.evals_total = record.evals_total;
    row.h_max = record.h_max;
    row.termination = record.termination;
    row.trace = std::move(record.trace);
    if constexpr (std::is_same_v<Adapter, lrp::Adapter>) {
        row.feasible = lrp::is_feasible(adapter.instance(), record.best_solution);
    }
    return row;
}

}  // namespace

ProblemKind parse_problem_kind(std::string_view text) {
    if (text == "smtwtp") return ProblemKind::Smtwtp;
    if (text == "lrp") return ProblemKind::Lrp;
    throw std::invalid_argument("unknown problem: " + std::string(text));
}

Algorithm parse_algorithm(std::string_view text) {
    if (text == "nts") return Algorithm::Nts;
    if (text == "vnd") return Algorithm::Vnd;
    if (text == "vnd-restart") return Algorithm::VndRestart;
    if (text == "vns") return Algorithm::Vns;
    throw std::invalid_argument("unknown algorithm: " + std::string(text));
}

std::string_view to_string(ProblemKind kind) { return kind == ProblemKind::Smtwtp ? "smtwtp" : "lrp"; }

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::Nts: return "nts";
        case Algorithm::Vnd: return "vnd";
        case Algorithm::VndRestart: return "vnd-restart";
        case Algorithm::Vns: return "vns";
    }
    return "?";
}

std::vector<NeighborhoodId> parse_ordering(ProblemKind problem, std::string_view text) {
    std::vector<NeighborhoodId> ids;
    if (text.empty()) return ids;
    const bool letters = problem == ProblemKind::Smtwtp &&
                         std::all_of(text.begin(), text.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)); });
    if (letters) {
        for (const char c : text) ids.push_back(smtwtp::id_of(smtwtp::neighborhood_from_letter(c)));
        return ids;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const auto token = text.substr(start, end - start);
        int value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw std::invalid_argument("malformed neighborhood ordering: " + std::string(text));
        }
        ids.push_back(NeighborhoodId{value});
        start = end + 1;
    }
    return ids;
}

InstanceSet load_instances(ProblemKind kind, const std::filesystem::path& path) {
    InstanceSet set;
    set.kind = kind;
    if (std::filesystem::is_directory(path)) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(path)) {
            if (!entry.is_regular_file()) continue;
            if (kind == ProblemKind::Lrp && entry.path().extension() != ".lrp") continue;
            if (kind == ProblemKind::Smtwtp && entry.path().extension() != ".txt") continue;
            files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            if (kind == ProblemKind::Smtwtp) {
                add_smtwtp_file(set, file, true);
            } else {
                set.ids.push_back(file.stem().string());
                set.lrp.push_back(lrp::parse_lrp(read_file(file)));
            }
        }
    } else if (kind == ProblemKind::Smtwtp) {
        add_smtwtp_file(set, path, false);
    } else {
        set.ids.push_back(path.stem().string());
        set.lrp.push_back(lrp::parse_lrp(read_file(path)));
    }
    if (set.size() == 0) throw std::runtime_error("no instances found at " + path.string());
    for (const auto& id : set.ids) {
        if (id.find_first_of("\r\n") != std::string::npos) {
            throw std::runtime_error("instance id may not contain line breaks: " + id);
        }
    }
    return set;
}

void ExperimentSpec::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (max_evals < 1) throw std::invalid_argument("max-evals must be at least 1");
    if (label.find_first_of("\r\n") != std::string::npos) throw std::invalid_argument("label may not contain line breaks");
}

std::string ExperimentSpec::algorithm_label() const {
    if (!label.empty()) return label;
    std::string order;
    for (const auto id : ordering) {
        if (problem == ProblemKind::Smtwtp) {
            order += "?ESI"[id.value < 1 || id.value > 3 ? 0 : id.value];
        } else {
            if (!order.empty()) order += '.';
            order += std::to_string(id.value);
        }
    }
    if (order.empty()) order = problem == ProblemKind::Smtwtp ? "ESI" : "default";
    switch (algorithm) {
        case Algorithm::Nts:
            return SearchConfig{step, accept, backtrack, max_evals, 0}.label();
        case Algorithm::Vnd:
            return "VND-" + order + "-" + std::string(nts::to_string(step));
        case Algorithm::VndRestart:
            return "VND-R-" + order + "-" + std::string(nts::to_string(step));
        case Algorithm::Vns:
            return "VNS-" + std::string(nts::to_string(step));
    }
    return "?";
}

std::vector<TrialRow> run_experiment(const ExperimentSpec& spec, const InstanceSet& instances) {
    spec.validate();
    if (instances.kind != spec.problem) throw std::invalid_argument("instance set does not match problem");

    const std::string label = spec.algorithm_label();
    const std::size_t total = instances.size() * spec.trials;
    std::vector<TrialRow> rows(total);

    // Adapters are built once per instance and shared read-only by workers.
    std::vector<smtwtp::Adapter> smtwtp_adapters;
    std::vector<lrp::Adapter> lrp_adapters;
    for (const auto& inst : instances.smtwtp) smtwtp_adapters.emplace_back(inst);
    for (const auto& inst : instances.lrp) lrp_adapters.emplace_back(inst);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const auto work = [&] {
        while (true) {
            const std::size_t task = next.fetch_add(1);
            if (task >= total) return;
            const std::size_t i = task / spec.trials;
            const std::size_t t = task % spec.trials;
            const std::uint64_t seed = spec.base_seed + t;
            try {
                TrialRow row;
                if (spec.problem == ProblemKind::Smtwtp) {
                    const auto& adapter = smtwtp_adapters[i];
                    row = run_trial(adapter, spec, seed, adapter.instance().size());
                } else {
                    const auto& adapter = lrp_adapters[i];
                    row = run_trial(adapter, spec, seed,
                                    adapter.instance().clients() + adapter.instance().depots());
                }
                row.instance = instances.ids[i];
                row.algorithm = label;
                row.trial = t;
                rows[task] = std::move(row);
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = total;
            }
        }
    };

    unsigned workers = spec.workers != 0 ? spec.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::vector<TrialRow> run_experiment(const ExperimentSpec& spec) {
    return run_experiment(spec, load_instances(spec.problem, spec.instances));
}

}  // namespace nts::bench
