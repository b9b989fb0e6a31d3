#include "nts/bench/table_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "nts/core/errors.hpp"
#include "nts/core/format.hpp"
#include "nts/core/rng.hpp"

namespace nts::bench {

namespace {

std::vector<std::string_view> split(std::string_view line, char separator) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(separator, start);
        if (end == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, end - start));
        start = end + 1;
    }
}

// Fields containing a comma or quote are wrapped in quotes, quotes doubled.
std::string csv_field(std::string_view value) {
    if (value.find_first_of(",\"") == std::string_view::npos) return std::string(value);
    std::string out = "\"";
    for (const char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::vector<std::string> csv_fields(std::string_view line, std::size_t number) {
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c != '"') {
                fields.back() += c;
            } else if (i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else {
                quoted = false;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted) throw ParseError("line " + std::to_string(number) + ": unterminated quote", number);
    return fields;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw ParseError("line " + std::to_string(line) + ": " + message, line);
}

template <class T>
T number(std::string_view token, std::size_t line, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        fail(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

using RowKey = std::tuple<std::string, std::string, std::size_t>;

}  // namespace

std::string format_rows_csv(std::span<const TrialRow> rows) {
    std::string out(kRowsHeader);
    out += '\n';
    for (const auto& row : rows) {
        out += csv_field(row.instance) + ',' + csv_field(row.algorithm) + ',' + std::to_string(row.trial) + ',' +
               std::to_string(row.seed) + ',' + format_real(row.best_fitness) + ',' +
               std::to_string(row.evals_to_best) + ',' + std::to_string(row.evals_total) + ',' +
               std::to_string(row.h_max) + ',' + (row.feasible ? "1" : "0") + ',' +
               std::string(to_string(row.termination)) + '\n';
    }
    return out;
}

std::string format_traces_csv(std::span<const TrialRow> rows) {
    std::string out(kTracesHeader);
    out += '\n';
    for (const auto& row : rows) {
        const std::string prefix = csv_field(row.instance) + ',' + csv_field(row.algorithm) + ',' + std::to_string(row.trial) + ',';
        for (const auto& point : row.trace) {
            out += prefix + std::to_string(point.evals) + ',' + format_real(point.fitness) + '\n';
        }
    }
    return out;
}

std::vector<TrialRow> parse_rows_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != kRowsHeader) fail(1, "expected header '" + std::string(kRowsHeader) + "'");
    std::vector<TrialRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t n = i + 1;
        if (lines[i].empty()) continue;
        const auto f = csv_fields(lines[i], n);
        if (f.size() != 10) fail(n, "expected 10 fields, got " + std::to_string(f.size()));
        TrialRow row;
        row.instance = f[0];
        row.algorithm = f[1];
        row.trial = number<std::size_t>(f[2], n, "trial");
        row.seed = number<std::uint64_t>(f[3], n, "seed");
        row.best_fitness = number<double>(f[4], n, "best_fitness");
        row.evals_to_best = number<std::uint64_t>(f[5], n, "evals_to_best");
        row.evals_total = number<std::uint64_t>(f[6], n, "evals_total");
        row.h_max = number<std::uint64_t>(f[7], n, "h_max");
        if (f[8] != "0" && f[8] != "1") fail(n, "feasible must be 0 or 1");
        row.feasible = f[8] == "1";
        try {
            row.termination = parse_termination(f[9]);
        } catch (const std::invalid_argument& e) {
            fail(n, e.what());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void attach_traces(std::vector<TrialRow>& rows, std::string_view traces_csv) {
    std::map<RowKey, TrialRow*> index;
    for (auto& row : rows) {
        row.trace.clear();
        index[{row.instance, row.algorithm, row.trial}] = &row;
    }
    const auto lines = lines_of(traces_csv);
    if (lines.empty() || lines[0] != kTracesHeader) fail(1, "expected header '" + std::string(kTracesHeader) + "'");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::size_t n = i + 1;
        if (lines[i].empty()) continue;
        const auto f = csv_fields(lines[i], n);
        if (f.size() != 5) fail(n, "expected 5 fields, got " + std::to_string(f.size()));
        const RowKey key{f[0], f[1], number<std::size_t>(f[2], n, "trial")};
        const auto it = index.find(key);
        if (it == index.end()) fail(n, "trace point for an unknown row");
        it->second->trace.push_back({number<std::uint64_t>(f[3], n, "evals"), number<double>(f[4], n, "fitness")});
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

void save_run(const std::filesystem::path& dir, std::span<const TrialRow> rows, const ExperimentSpec& spec) {
    std::filesystem::create_directories(dir);
    write_text_file(dir / "rows.csv", format_rows_csv(rows));
    write_text_file(dir / "traces.csv", format_traces_csv(rows));

    nlohmann::ordered_json meta;
    meta["problem"] = to_string(spec.problem);
    meta["instances"] = spec.instances.string();
    meta["algorithm"] = spec.algorithm_label();
    meta["trials"] = spec.trials;
    meta["base_seed"] = spec.base_seed;
    meta["max_evals"] = spec.max_evals;
    meta["rng"] = Rng::kAlgorithm;
    meta["deviation"] = "100*(f-f_opt)/max(f_opt,1)";
    meta["trace"] = "strict improvements only";
    write_text_file(dir / "meta.json", meta.dump(2) + '\n');
}

std::vector<TrialRow> load_run(const std::filesystem::path& dir) {
    auto rows = parse_rows_csv(read_text_file(dir / "rows.csv"));
    if (std::filesystem::exists(dir / "traces.csv")) attach_traces(rows, read_text_file(dir / "traces.csv"));
    return rows;
}

ReferenceValues parse_reference_values(std::string_view text) {
    ReferenceValues values;
    std::size_t plain = 0;
    std::size_t keyed = 0;
    std::size_t number_of_line = 0;
    for (auto line : lines_of(text)) {
        ++number_of_line;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        std::vector<std::string_view> tokens;
        for (const auto token : split(line, ' ')) {
            for (const auto part : split(token, '\t')) {
                if (!part.empty()) tokens.push_back(part);
            }
        }
        if (tokens.empty()) continue;
        std::string id;
        std::string_view value;
        if (tokens.size() == 1) {
            id = std::to_string(++plain);
            value = tokens[0];
        } else if (tokens.size() == 2) {
            ++keyed;
            id = std::string(tokens[0]);
            value = tokens[1];
        } else {
            fail(number_of_line, "expected 'id value' or a single value");
        }
        if (plain > 0 && keyed > 0) fail(number_of_line, "mixed plain and keyed reference lines");
        if (!values.emplace(id, number<double>(value, number_of_line, "reference value")).second) {
            fail(number_of_line, "duplicate id '" + id + "'");
        }
    }
    return values;
}

}  // namespace nts::bench
