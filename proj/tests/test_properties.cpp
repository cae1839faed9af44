#include <iostream>

#include "doctest.h"
#include "properties.hpp"

using namespace lbr;

namespace {

void require_clean(const props::Report& r) {
    INFO(r.name);
    for (const auto& d : r.details) MESSAGE(d);
    CHECK(r.cases >= 100);
    CHECK(r.violations == 0);
}

}  // namespace

TEST_CASE("union law") { require_clean(props::union_law(101, 100)); }
TEST_CASE("sum of squares law") { require_clean(props::sum_of_squares_law(102, 100)); }
TEST_CASE("ring closure") { require_clean(props::ring_closure(103, 100)); }
TEST_CASE("arc order is nonnegative for bounded functions") { require_clean(props::arc_order_nonnegative(104, 100)); }
TEST_CASE("blowup invariance") { require_clean(props::blowup_invariance(105, 100)); }
TEST_CASE("scan and decision agree") { require_clean(props::scan_decision_agreement(106, 100)); }
TEST_CASE("value set contains scan limits") { require_clean(props::value_set_sampling(107, 100)); }
