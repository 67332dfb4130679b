#include "pgsas/sut_model.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace pgsas {

SutConfig::SutConfig(std::vector<int> cardinalities) : cards_(std::move(cardinalities)) {
    if (cards_.size() < 2) {
        throw std::invalid_argument("pairwise model needs at least two parameters, got " +
                                    std::to_string(cards_.size()));
    }
    for (std::size_t d = 0; d < cards_.size(); ++d) {
        if (cards_[d] < 2) {
            throw std::invalid_argument("parameter " + std::to_string(d) + " has cardinality " +
                                        std::to_string(cards_[d]) + ", need at least 2");
        }
    }
}

std::string SutConfig::canonical_text() const {
    std::string out;
    std::size_t i = 0;
    while (i < cards_.size()) {
        std::size_t j = i;
        while (j < cards_.size() && cards_[j] == cards_[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(cards_[i]);
        out += '^';
        out += std::to_string(j - i);
        i = j;
    }
    return out;
}

bool valid_for(const TestCase& tc, const SutConfig& config) {
    if (static_cast<int>(tc.values.size()) != config.parameter_count()) return false;
    for (int d = 0; d < config.parameter_count(); ++d) {
        const int v = tc.values[static_cast<std::size_t>(d)];
        if (v < 0 || v >= config.cardinality(d)) return false;
    }
    return true;
}

bool TestSuite::contains(const TestCase& tc) const {
    return std::find(cases.begin(), cases.end(), tc) != cases.end();
}

namespace {

int parse_int(std::string_view token, std::string_view segment, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("malformed segment '" + std::string(segment) + "': bad " + what);
    }
    return value;
}

} // namespace

SutConfig parse_config(std::string_view text) {
    std::vector<int> cards;
    std::size_t pos = 0;
    const auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ','; };
    while (pos < text.size()) {
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        const std::string_view segment = text.substr(pos, end - pos);
        pos = end;

        const std::size_t caret = segment.find('^');
        if (caret == std::string_view::npos || segment.find('^', caret + 1) != std::string_view::npos) {
            throw ParseError("malformed segment '" + std::string(segment) + "': expected v^p");
        }
        const int values = parse_int(segment.substr(0, caret), segment, "value count");
        const int params = parse_int(segment.substr(caret + 1), segment, "parameter count");
        if (values < 2) {
            throw ParseError("segment '" + std::string(segment) + "': parameters need at least 2 values");
        }
        if (params < 1) {
            throw ParseError("segment '" + std::string(segment) + "': parameter count must be positive");
        }
        if (cards.size() + static_cast<std::size_t>(params) > 100000) {
            throw ParseError("segment '" + std::string(segment) + "': configuration too large");
        }
        cards.insert(cards.end(), static_cast<std::size_t>(params), values);
    }
    if (cards.empty()) throw ParseError("empty configuration string");
    if (cards.size() < 2) {
        throw ParseError("configuration '" + std::string(text) + "' has fewer than two parameters");
    }
    return SutConfig(std::move(cards));
}

std::uint64_t exhaustive_size(const SutConfig& config) {
    std::uint64_t product = 1;
    for (const int v : config.cardinalities()) {
        if (__builtin_mul_overflow(product, static_cast<std::uint64_t>(v), &product)) {
            throw std::overflow_error("exhaustive size exceeds 64 bits for " + config.canonical_text());
        }
    }
    return product;
}

} // namespace pgsas
