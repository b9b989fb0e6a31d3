#include "nts/smtwtp/io.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "nts/core/errors.hpp"

namespace nts::smtwtp {

namespace {

std::vector<std::int64_t> read_integers(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (true) {
        pos = text.find_first_not_of(" \t\r\n", pos);
        if (pos == std::string_view::npos) break;
        auto end = text.find_first_of(" \t\r\n", pos);
        if (end == std::string_view::npos) end = text.size();
        const auto token = text.substr(pos, end - pos);
        std::int64_t value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw ParseError("non-integer token '" + std::string(token) + "' at token offset " +
                                 std::to_string(values.size()),
                             values.size());
        }
        values.push_back(value);
        pos = end;
    }
    return values;
}

Instance take_instance(const std::vector<std::int64_t>& values, std::size_t offset, std::size_t n) {
    const auto at = [&](std::size_t k) { return values.begin() + static_cast<std::ptrdiff_t>(offset + k); };
    try {
        return Instance({at(0), at(n)}, {at(n), at(2 * n)}, {at(2 * n), at(3 * n)});
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " (instance at token offset " +
                             std::to_string(offset) + ")",
                         offset);
    }
}

}  // namespace

std::vector<Instance> parse_orlib(std::string_view text, std::size_t n) {
    if (n != 40 && n != 50 && n != 100) {
        throw std::invalid_argument("parse_orlib: n must be 40, 50 or 100");
    }
    const auto values = read_integers(text);
    const std::size_t expected = kOrlibInstanceCount * 3 * n;
    if (values.size() != expected) {
        throw ParseError("expected " + std::to_string(expected) + " integers, found " +
                             std::to_string(values.size()) + " (mismatch at token offset " +
                             std::to_string(std::min(values.size(), expected)) + ")",
                         std::min(values.size(), expected));
    }
    std::vector<Instance> out;
    out.reserve(kOrlibInstanceCount);
    for (std::size_t i = 0; i < kOrlibInstanceCount; ++i) {
        out.push_back(take_instance(values, i * 3 * n, n));
    }
    return out;
}

std::string format_orlib(std::span<const Instance> instances) {
    std::string out;
    for (const auto& inst : instances) {
        for (const auto column : {inst.processing(), inst.weight(), inst.due()}) {
            std::size_t on_line = 0;
            for (const auto v : column) {
                out += ' ';
                out += std::to_string(v);
                if (++on_line == 20) {
                    out += '\n';
                    on_line = 0;
                }
            }
            if (on_line != 0) out += '\n';
        }
    }
    return out;
}

std::vector<std::int64_t> load_optima(std::string_view text) {
    auto values = read_integers(text);
    if (values.size() != kOrlibInstanceCount) {
        throw ParseError("expected 125 optimal values, found " + std::to_string(values.size()),
                         values.size());
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0) throw ParseError("negative optimal value at offset " + std::to_string(i), i);
    }
    return values;
}

Instance parse_instance(std::string_view text) {
    const auto values = read_integers(text);
    if (values.empty()) throw ParseError("empty instance text", 0);
    if (values[0] < 1) throw ParseError("job count must be positive", 0);
    const auto n = static_cast<std::size_t>(values[0]);
    if (values.size() != 1 + 3 * n) {
        throw ParseError("expected " + std::to_string(1 + 3 * n) + " integers, found " +
                             std::to_string(values.size()),
                         std::min(values.size(), 1 + 3 * n));
    }
    return take_instance(values, 1, n);
}

std::string format_instance(const Instance& inst) {
    std::string out = std::to_string(inst.size()) + '\n';
    for (const auto column : {inst.processing(), inst.weight(), inst.due()}) {
        for (std::size_t j = 0; j < column.size(); ++j) {
            if (j) out += ' ';
            out += std::to_string(column[j]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace nts::smtwtp
