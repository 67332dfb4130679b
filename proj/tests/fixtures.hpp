#ifndef PGSAS_TESTS_FIXTURES_HPP
#define PGSAS_TESTS_FIXTURES_HPP

#include <vector>

#include "pgsas/sut_model.hpp"

namespace pgsas::testing {

/// The five-parameter two-valued example system used in the docs.
inline SutConfig doc_example_config() { return SutConfig({2, 2, 2, 2, 2}); }

/// Seven hand-picked cases that fully cover the doc example pairwise
/// (0 = on/active, 1 = off/inactive).
inline TestSuite doc_example_suite() {
    TestSuite suite(doc_example_config());
    for (const auto& values : std::initializer_list<std::vector<int>>{
             {0, 0, 0, 0, 0},
             {0, 1, 1, 1, 1},
             {1, 0, 0, 0, 1},
             {1, 1, 1, 1, 0},
             {0, 0, 1, 0, 0},
             {1, 1, 0, 0, 1},
             {0, 0, 0, 1, 0},
         }) {
        suite.cases.push_back(TestCase{values});
    }
    return suite;
}

} // namespace pgsas::testing

#endif // PGSAS_TESTS_FIXTURES_HPP
