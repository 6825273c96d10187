#include "catch_amalgamated.hpp"

#include "ellis/constructions.hpp"
#include "ellis/error.hpp"
#include "ellis/greens.hpp"
#include "ellis/rees.hpp"

using namespace ellis;

TEST_CASE("Rees multiplication", "[rees]") {
  auto const trivial = make_rees_data(cyclic_group(1), {{0, 0}, {0, 0}});
  CHECK(rees_multiply(trivial, {1, 0, 0}, {0, 0, 1}) == ReesElement{1, 0, 1});

  auto const z2 = make_rees_data(cyclic_group(2), {{1, 1}, {1, 1}});
  CHECK(rees_multiply(z2, {0, 1, 1}, {1, 1, 0}) == ReesElement{0, 1, 0});
  auto const n2 = make_rees_data(cyclic_group(2), {{0, 0}, {0, 1}});
  CHECK(n2.normalized);
  CHECK(rees_multiply(n2, {1, 1, 0}, {1, 1, 1}) == ReesElement{1, 0, 1});
  CHECK_THROWS_AS(rees_multiply(n2, {2, 0, 0}, {0, 0, 0}), std::out_of_range);
  CHECK_THROWS_AS(make_rees_data(cyclic_group(2), {{0, 2}}), std::invalid_argument);
}

TEST_CASE("Rees decomposition of standard semigroups", "[rees]") {
  auto const lz = rees_decompose(left_zero(3));
  CHECK(lz.data.group.size() == 1);
  CHECK(lz.data.i_count == 3);
  CHECK(lz.data.lambda_count == 1);

  auto const g = rees_decompose(cyclic_group(4));
  CHECK(g.data.i_count == 1);
  CHECK(g.data.lambda_count == 1);
  CHECK(g.data.sandwich[0][0] == g.data.identity);

  auto const km = rees_decompose(direct_product(left_zero(3), cyclic_group(5)));
  CHECK(km.data.group.size() == 5);
  CHECK(km.data.i_count == 3);
  CHECK(km.data.lambda_count == 1);
  CHECK(find_isomorphism(km.data.group, cyclic_group(5)).has_value());

  CHECK_THROWS_AS(rees_decompose(FiniteSemigroup::closure({Transformation{0, 0, 1}})),
                  std::invalid_argument);
}

TEST_CASE("normalization", "[rees]") {
  auto const d = make_rees_data(cyclic_group(2), {{1, 1}, {1, 0}});
  CHECK_FALSE(d.normalized);
  auto const n = rees_normalize(d);
  CHECK(n.normalized);
  CHECK(n.sandwich == std::vector<std::vector<index_t>>{{0, 0}, {0, 1}});
  CHECK(find_isomorphism(matrix_semigroup(d), matrix_semigroup(n)).has_value());

  auto const already = make_rees_data(cyclic_group(3), {{0, 0}, {0, 2}});
  CHECK(rees_normalize(already).sandwich == already.sandwich);

  auto const t = rees_normalize(make_rees_data(cyclic_group(1), {{0, 0, 0}}));
  CHECK(t.normalized);
}

TEST_CASE("left simple dichotomy", "[rees]") {
  auto const                 Z3 = cyclic_group(3);
  std::vector<index_t> const all{0, 1, 2};
  CHECK(left_simple_dichotomy(Z3, all, all) == Dichotomy::left_simple);

  auto const                 LZ2 = left_zero(2);
  std::vector<index_t> const x{0}, y{1};
  CHECK(left_simple_dichotomy(LZ2, x, y) == Dichotomy::left_simple);

  auto const RZ2 = right_zero(2);
  CHECK(left_simple_dichotomy(RZ2, x, y) == Dichotomy::two_minimal_left_ideals);

  // not covering
  CHECK_THROWS_AS(left_simple_dichotomy(RZ2, x, x), std::invalid_argument);
  // not completely simple
  auto const P = FiniteSemigroup::closure({Transformation{0, 0, 1}});
  CHECK_THROWS_AS(left_simple_dichotomy(P, std::vector<index_t>{0, 1}, std::vector<index_t>{0, 1}),
                  std::invalid_argument);
}

TEST_CASE("isomorphism search", "[rees]") {
  CHECK(find_isomorphism(left_zero(3), left_zero(3)).has_value());
  CHECK_FALSE(find_isomorphism(left_zero(3), right_zero(3)).has_value());
  CHECK_FALSE(find_isomorphism(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2)))
                  .has_value());
  auto const iso = find_isomorphism(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3)));
  REQUIRE(iso);
  auto const A = cyclic_group(6);
  auto const B = direct_product(cyclic_group(2), cyclic_group(3));
  for (index_t a = 0; a < 6; ++a)
    for (index_t b = 0; b < 6; ++b)
      CHECK((*iso)[A.product(a, b)] == B.product((*iso)[a], (*iso)[b]));
}
