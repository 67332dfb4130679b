#include "pgsas/verifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgsas {

CoverageReport verify_coverage(const TestSuite& suite, const SutConfig& config) {
    for (std::size_t n = 0; n < suite.cases.size(); ++n) {
        if (!valid_for(suite.cases[n], config)) {
            throw std::invalid_argument("suite case " + std::to_string(n) +
                                        " is not valid for " + config.canonical_text());
        }
    }

    CoverageReport report;
    const int p = config.parameter_count();
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            for (int a = 0; a < config.cardinality(i); ++a) {
                for (int b = 0; b < config.cardinality(j); ++b) {
                    ++report.total;
                    const bool hit = std::any_of(
                        suite.cases.begin(), suite.cases.end(), [&](const TestCase& tc) {
                            return tc.values[i] == a && tc.values[j] == b;
                        });
                    if (hit) {
                        ++report.covered;
                    } else {
                        report.missing.push_back({i, a, j, b});
                    }
                }
            }
        }
    }
    report.complete = report.missing.empty();
    return report;
}

long long lower_bound(const SutConfig& config) {
    int largest = 0;
    int second = 0;
    for (const int v : config.cardinalities()) {
        if (v >= largest) {
            second = largest;
            largest = v;
        } else if (v > second) {
            second = v;
        }
    }
    return static_cast<long long>(largest) * second;
}

double coverage_percentage(const TestSuite& suite, const SutConfig& config) {
    const CoverageReport report = verify_coverage(suite, config);
    return 100.0 * static_cast<double>(report.covered) / static_cast<double>(report.total);
}

} // namespace pgsas
