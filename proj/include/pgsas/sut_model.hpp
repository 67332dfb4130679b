#ifndef PGSAS_SUT_MODEL_HPP
#define PGSAS_SUT_MODEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgsas {

/// Raised when a configuration string or suite file cannot be parsed.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ordered list of parameter cardinalities describing the system under test.
///
/// Construction validates the model: at least two parameters, every
/// parameter with at least two values. Immutable afterwards.
class SutConfig {
public:
    explicit SutConfig(std::vector<int> cardinalities);

    int parameter_count() const { return static_cast<int>(cards_.size()); }
    int cardinality(int param) const { return cards_[static_cast<std::size_t>(param)]; }
    const std::vector<int>& cardinalities() const { return cards_; }

    /// Canonical text form, consecutive equal cardinalities grouped: "3^4 2^2".
    std::string canonical_text() const;

    bool operator==(const SutConfig&) const = default;

private:
    std::vector<int> cards_;
};

/// One discrete test case: a 0-based value index per parameter.
struct TestCase {
    std::vector<int> values;

    bool operator==(const TestCase&) const = default;
};

/// True iff the case has one in-range value index per parameter.
bool valid_for(const TestCase& tc, const SutConfig& config);

struct SuiteMetadata {
    std::uint64_t seed = 0;
    long long total_iterations = 0;
    double duration_seconds = 0.0;
};

/// Ordered accumulation of accepted test cases for one configuration.
struct TestSuite {
    explicit TestSuite(SutConfig cfg) : config(std::move(cfg)) {}

    SutConfig config;
    std::vector<TestCase> cases;
    SuiteMetadata metadata;

    std::size_t size() const { return cases.size(); }
    bool contains(const TestCase& tc) const;
};

/// Parses "v^p" segments separated by whitespace or commas, e.g. "3^4 2^2"
/// -> cardinalities [3,3,3,3,2,2]. Throws ParseError naming the offending
/// segment on malformed input, v < 2, or fewer than two parameters total.
SutConfig parse_config(std::string_view text);

/// Product of all cardinalities. Throws std::overflow_error instead of
/// wrapping when the product exceeds 64 bits.
std::uint64_t exhaustive_size(const SutConfig& config);

} // namespace pgsas

#endif // PGSAS_SUT_MODEL_HPP
