#include "nts/lrp/io.hpp"

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "nts/core/errors.hpp"
#include "nts/core/format.hpp"

namespace nts::lrp {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        auto content = text.substr(start, end - start);
        if (const auto hash = content.find('#'); hash != std::string_view::npos) {
            content = content.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t pos = 0;
        while (true) {
            pos = content.find_first_not_of(" \t\r", pos);
            if (pos == std::string_view::npos) break;
            auto stop = content.find_first_of(" \t\r", pos);
            if (stop == std::string_view::npos) stop = content.size();
            line.tokens.push_back(content.substr(pos, stop - pos));
            pos = stop;
        }
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

class Reader {
public:
    explicit Reader(std::vector<Line> lines) : lines_(std::move(lines)) {}

    const Line& next(std::size_t expected_tokens, const char* what) {
        if (index_ >= lines_.size()) {
            const std::size_t last = lines_.empty() ? 1 : lines_.back().number + 1;
            throw ParseError("line " + std::to_string(last) + ": unexpected end of input, expected " + what,
                             last);
        }
        const Line& line = lines_[index_++];
        if (expected_tokens != 0 && line.tokens.size() != expected_tokens) {
            fail(line, std::string("expected ") + std::to_string(expected_tokens) + " field(s) for " + what);
        }
        return line;
    }

    bool done() const { return index_ >= lines_.size(); }
    const Line& peek() const { return lines_[index_]; }

    [[noreturn]] static void fail(const Line& line, const std::string& message) {
        throw ParseError("line " + std::to_string(line.number) + ": " + message, line.number);
    }

    static double real(const Line& line, std::string_view token, const char* what) {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
            fail(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
        }
        return value;
    }

    static std::size_t count(const Line& line, std::string_view token, const char* what) {
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            fail(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
        }
        return value;
    }

private:
    std::vector<Line> lines_;
    std::size_t index_ = 0;
};

}  // namespace

Instance parse_lrp(std::string_view text) {
    Reader reader(split_lines(text));
    const Line& header = reader.next(4, "header 'n m alpha rounding'");
    const std::size_t n = Reader::count(header, header.tokens[0], "client count");
    const std::size_t m = Reader::count(header, header.tokens[1], "depot count");
    if (m == 0) Reader::fail(header, "depot count must be positive");
    const bool auto_alpha = header.tokens[2] == "auto";
    const double alpha = auto_alpha ? 0.0 : Reader::real(header, header.tokens[2], "alpha");
    Rounding rounding = Rounding::None;
    if (header.tokens[3] == "none") {
        rounding = Rounding::None;
    } else if (header.tokens[3] == "nearest-integer") {
        rounding = Rounding::NearestInteger;
    } else {
        Reader::fail(header, "rounding must be 'none' or 'nearest-integer'");
    }

    std::vector<double> demand(n);
    for (auto& d : demand) {
        const Line& line = reader.next(1, "client demand");
        d = Reader::real(line, line.tokens[0], "demand");
    }
    std::vector<double> capacity(m);
    std::vector<double> opening(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Line& line = reader.next(2, "'capacity opening_cost'");
        capacity[j] = Reader::real(line, line.tokens[0], "capacity");
        opening[j] = Reader::real(line, line.tokens[1], "opening cost");
    }

    const std::size_t size = n + m;
    std::vector<double> travel(size * size);
    const Line& section = reader.next(1, "MATRIX or COORDS");
    if (section.tokens[0] == "MATRIX") {
        for (std::size_t a = 0; a < size; ++a) {
            const Line& line = reader.next(size, "matrix row");
            for (std::size_t b = 0; b < size; ++b) {
                travel[a * size + b] = Reader::real(line, line.tokens[b], "travel cost");
            }
        }
    } else if (section.tokens[0] == "COORDS") {
        std::vector<std::pair<double, double>> xy(size);
        for (auto& point : xy) {
            const Line& line = reader.next(2, "'x y'");
            point = {Reader::real(line, line.tokens[0], "x"), Reader::real(line, line.tokens[1], "y")};
        }
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = 0; b < size; ++b) {
                double d = std::hypot(xy[a].first - xy[b].first, xy[a].second - xy[b].second);
                if (rounding == Rounding::NearestInteger) d = std::round(d);
                travel[a * size + b] = d;
            }
        }
    } else {
        Reader::fail(section, "expected MATRIX or COORDS");
    }
    if (!reader.done()) Reader::fail(reader.peek(), "unexpected trailing content");

    try {
        const double weight = auto_alpha ? Instance::default_alpha(travel) : alpha;
        return Instance(std::move(demand), std::move(capacity), std::move(opening), std::move(travel),
                        weight, rounding);
    } catch (const std::invalid_argument& e) {
        throw ParseError("line " + std::to_string(section.number) + ": " + e.what(), section.number);
    }
}

std::string format_lrp(const Instance& inst) {
    std::string out = std::to_string(inst.clients()) + ' ' + std::to_string(inst.depots()) + ' ' +
                      format_real(inst.alpha()) + ' ' +
                      (inst.rounding() == Rounding::None ? "none" : "nearest-integer") + '\n';
    for (std::size_t c = 0; c < inst.clients(); ++c) out += format_real(inst.demand(c)) + '\n';
    for (std::size_t j = 0; j < inst.depots(); ++j) {
        out += format_real(inst.capacity(j)) + ' ' + format_real(inst.opening_cost(j)) + '\n';
    }
    out += "MATRIX\n";
    for (std::size_t a = 0; a < inst.nodes(); ++a) {
        for (std::size_t b = 0; b < inst.nodes(); ++b) {
            if (b) out += ' ';
            out += format_real(inst.travel(a, b));
        }
        out += '\n';
    }
    return out;
}

}  // namespace nts::lrp
