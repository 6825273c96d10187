#include <catch_amalgamated.hpp>

#include "ellis/analysis.hpp"
#include "ellis/constructions.hpp"
#include "ellis/io.hpp"

using namespace ellis;

namespace {
  std::size_t count(std::string const& s, std::string const& what) {
    std::size_t n = 0;
    for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) {
      ++n;
    }
    return n;
  }
}  // namespace

TEST_CASE("Cayley tables round trip through JSON") {
  auto S = FiniteSemigroup::closure({Transformation{0, 0, 1}, Transformation{2, 2, 2}});
  auto j = cayley_to_json(S);
  CHECK(j["elements"].size() == S.size());
  CHECK(j["table"].size() == S.size());
  auto T = cayley_from_json(nlohmann::json::parse(j.dump()));
  CHECK(T.size() == S.size());
  CHECK(T.table() == S.table());
  CHECK(T.elements() == S.elements());
  CHECK(T.generators() == S.generators());

  auto C = cyclic_group(4);
  auto k = cayley_from_json(nlohmann::json::parse(cayley_to_json(C).dump()));
  CHECK(k.table() == C.table());
  CHECK(k.label(3) == "3");
}

TEST_CASE("malformed Cayley JSON is rejected") {
  CHECK_THROWS_AS(cayley_from_json(nlohmann::json::parse(R"({"table": [[0, 1], [1]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(cayley_from_json(nlohmann::json::parse(R"({"table": [[0, 2], [1, 0]]})")),
                  std::invalid_argument);
  // a table that disagrees with the composition of the listed maps
  CHECK_THROWS_AS(cayley_from_json(nlohmann::json::parse(
                      R"({"elements": [[0, 0], [1, 1]], "table": [[1, 1], [0, 0]]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(cayley_from_json(nlohmann::json::parse(R"([1, 2])")), std::invalid_argument);
}

TEST_CASE("fiber Cayley table of the three-letter example") {
  auto th = parse_substitution("alphabet: a b c\nrules:\n a: a a c a a\n b: a b c a a\n c: a c c b a\n");
  auto j  = cayley_of_fiber(th);
  REQUIRE(j["labels"].size() == 5);
  auto S = cayley_from_json(nlohmann::json::parse(j.dump()));
  auto at = [&](std::string const& l) {
    for (index_t g = 0; g < S.size(); ++g) {
      if (j["labels"][g] == l) {
        return g;
      }
    }
    FAIL("missing " << l);
    return index_t{0};
  };
  CHECK(S.product(at("phi"), at("Pi_c")) == at("Pi_b"));
  CHECK(S.product(at("Pi_c"), at("phi")) == at("Pi_c"));
  CHECK(S.product(at("phi"), at("phi")) == at("Pi_a"));

  auto F             = build_fiber_semigroup(th);
  auto [fwd, bwd]    = directional_shadows(F);
  CHECK(fwd.size() == 4);
  CHECK(bwd.size() == 3);
  CHECK(bwd.label(0).rfind("Pi_", 0) == 0);
}

TEST_CASE("egg-box diagrams") {
  // fiber semigroup: D-classes {id}, {phi}, {Pi_a, Pi_b, Pi_c}
  auto S = FiniteSemigroup::closure({Transformation{0, 1, 2}, Transformation{0, 0, 0}, Transformation{1, 1, 1},
                                     Transformation{2, 2, 2}, Transformation{0, 0, 1}});
  auto dot = eggbox_dot(S, "fib");
  CHECK(dot.rfind("digraph \"fib\"", 0) == 0);
  CHECK(count(dot, "subgraph cluster_D") == 3);
  // id and the three constants are groups, phi is not
  CHECK(count(dot, "bgcolor=\"lightgray\"") == 4);

  auto G = cyclic_group(3);
  auto g = eggbox_dot(G);
  CHECK(count(g, "subgraph cluster_D") == 1);
  CHECK(count(g, "bgcolor=\"lightgray\"") == 1);
}
