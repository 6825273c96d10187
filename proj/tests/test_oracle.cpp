#include <catch_amalgamated.hpp>

#include "ellis/oracle.hpp"

using namespace ellis;
namespace eo = ellis::oracle;

namespace {
  void require_clean(eo::Report const& r) {
    for (auto const& f : r.failures) {
      UNSCOPED_INFO(f.instance << ": " << f.what);
    }
    CHECK(r.passed());
    CHECK(r.instances > 0);
  }
}  // namespace

TEST_CASE("enumerating maps") {
  CHECK(eo::enumerate_transformations(1).size() == 1);
  CHECK(eo::enumerate_transformations(2).size() == 4);
  CHECK(eo::enumerate_transformations(3).size() == 27);
  auto four = eo::enumerate_transformations(4);
  CHECK(four.size() == 256);
  CHECK(std::is_sorted(four.begin(), four.end()));
  CHECK(std::adjacent_find(four.begin(), four.end()) == four.end());
  CHECK_THROWS_AS(eo::enumerate_transformations(0), std::invalid_argument);
  CHECK_THROWS_AS(eo::enumerate_transformations(5), std::invalid_argument);
}

TEST_CASE("complete regularity criteria up to degree 4") {
  auto r = eo::verify_cpreg_criterion(4);
  require_clean(r);
  CHECK(r.instances == 1 + 4 + 27 + 256);
  // regression values from the first run of this oracle; they agree with
  // sum_k C(n,k) k! k^(n-k) (image of size k, permuted, the rest mapped in)
  CHECK(r.counts["degree_1"]["completely_regular"] == 1);
  CHECK(r.counts["degree_2"]["completely_regular"] == 4);
  CHECK(r.counts["degree_3"]["completely_regular"] == 21);
  CHECK(r.counts["degree_4"]["completely_regular"] == 148);
}

TEST_CASE("kernel structure and union of groups on the closure corpus") {
  auto c = eo::corpus();
  // 1 + 4 + 27 single closures, C(1,2) + C(4,2) + C(27,2) pairs, samples, named
  CHECK(c.size() == 32 + 0 + 6 + 351 + 40 + 4);
  require_clean(eo::verify_kernel_structure(c));
  require_clean(eo::verify_union_of_groups(c));
}

TEST_CASE("Rees round trip") {
  auto r = eo::verify_rees_roundtrip();
  require_clean(r);
  // trivial group: 9 shapes; Z/2: every matrix; Z/3: exhaustive up to 6 cells
  CHECK(r.counts["group_order_1"] == 9);
  CHECK(r.counts["group_order_2"] == 682);
  CHECK(r.counts["group_order_3"] == 3 + 9 + 27 + 9 + 81 + 729 + 27 + 729 + 150);
}

TEST_CASE("left simple dichotomy") {
  auto r = eo::verify_left_simple_dichotomy();
  require_clean(r);
  CHECK(r.counts["left_simple"] > 0);
  CHECK(r.counts["two_minimal_left_ideals"] > 0);
}

TEST_CASE("reports serialize") {
  auto j = eo::to_json(eo::verify_cpreg_criterion(2));
  CHECK(j["suite"] == "cpreg");
  CHECK(j["passed"] == true);
  CHECK(j["failures"].empty());
}
