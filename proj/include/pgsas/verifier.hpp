#ifndef PGSAS_VERIFIER_HPP
#define PGSAS_VERIFIER_HPP

#include <cstdint>
#include <vector>

#include "pgsas/sut_model.hpp"
#include "pgsas/tuple_store.hpp"

namespace pgsas {

struct CoverageReport {
    std::size_t total = 0;
    std::size_t covered = 0;
    std::vector<InteractionTuple> missing;
    bool complete = false;
};

/// Brute-force pairwise coverage check. Enumerates every value pair of
/// every parameter pair and scans the whole suite for each; kept free of
/// TupleList so the two accountings can cross-check each other.
CoverageReport verify_coverage(const TestSuite& suite, const SutConfig& config);

/// v_a * v_b for the two largest cardinalities; no complete pairwise suite
/// can be smaller.
long long lower_bound(const SutConfig& config);

/// Covered tuples over total tuples, in percent.
double coverage_percentage(const TestSuite& suite, const SutConfig& config);

} // namespace pgsas

#endif // PGSAS_VERIFIER_HPP
