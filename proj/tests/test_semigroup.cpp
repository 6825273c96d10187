#include "catch_amalgamated.hpp"

#include <algorithm>
#include <set>

#include "ellis/constructions.hpp"
#include "ellis/error.hpp"
#include "ellis/greens.hpp"
#include "ellis/semigroup.hpp"

using namespace ellis;

namespace {
  Transformation const id3 = Transformation::identity(3);
  Transformation const phi{0, 0, 1};
  Transformation const pa{0, 0, 0}, pb{1, 1, 1}, pc{2, 2, 2};

  FiniteSemigroup fib() {
    return FiniteSemigroup::closure({phi, pa, pb, pc, id3});
  }

  std::vector<index_t> idx(FiniteSemigroup const& S, std::vector<Transformation> const& fs) {
    std::vector<index_t> out;
    for (auto const& f : fs) {
      out.push_back(*S.find(f));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
}  // namespace

TEST_CASE("closure sizes and ordering", "[closure]") {
  CHECK(FiniteSemigroup::closure({id3}).size() == 1);
  auto const P = FiniteSemigroup::closure({phi});
  REQUIRE(P.size() == 2);
  CHECK(P.element(0) == phi);
  CHECK(P.element(1) == pa);
  auto const E = fib();
  CHECK(E.size() == 5);
  CHECK(E.unit().has_value());
  CHECK_THROWS_AS(FiniteSemigroup::closure({}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup::closure({phi, Transformation{0, 1}}), std::invalid_argument);
  // same input, same ordering
  auto const F = fib();
  CHECK(E.elements() == F.elements());
}

TEST_CASE("table invariants", "[closure]") {
  auto const S = FiniteSemigroup::closure({Transformation{1, 0, 2, 3}, Transformation{0, 1, 1, 2},
                                           Transformation{3, 3, 0, 1}});
  for (index_t i = 0; i < S.size(); ++i)
    for (index_t j = 0; j < S.size(); ++j) {
      REQUIRE(S.element(S.product(i, j)) == S.element(i) * S.element(j));
    }
  // from_table round trip
  auto const T = FiniteSemigroup::from_table(S.table());
  CHECK(T.size() == S.size());
  // (0*0)*1 = 1*1 = 0 but 0*(0*1) = 0*0 = 1
  std::vector<std::vector<index_t>> nonassoc = {{1, 0}, {0, 0}};
  CHECK_THROWS_AS(FiniteSemigroup::from_table(nonassoc), std::invalid_argument);
  CHECK_THROWS_AS(FiniteSemigroup::from_table({{0, 2}, {0, 0}}), std::invalid_argument);
}

TEST_CASE("Green's relations of small semigroups", "[greens]") {
  auto const LZ = FiniteSemigroup::closure({pa, pb, pc});
  auto const G  = greens(LZ);
  CHECK(G.l_classes.size() == 1);
  CHECK(G.r_classes.size() == 3);
  CHECK(G.h_classes.size() == 3);

  auto const Z4 = cyclic_group(4);
  auto const H  = greens(Z4);
  CHECK(H.l_classes.size() == 1);
  CHECK(H.r_classes.size() == 1);
  CHECK(H.h_classes.size() == 1);

  auto const E  = fib();
  auto const GE = greens(E);
  index_t const p = *E.find(phi);
  CHECK(GE.h_classes[GE.h_of[p]] == std::vector<index_t>{p});
  CHECK_FALSE(is_group(E, GE.h_classes[GE.h_of[p]]));

  // H refines L and R
  for (auto const& h : GE.h_classes) {
    for (index_t x : h) {
      CHECK(GE.l_of[x] == GE.l_of[h.front()]);
      CHECK(GE.r_of[x] == GE.r_of[h.front()]);
    }
  }
}

TEST_CASE("idempotent order", "[greens]") {
  auto const E = fib();
  auto const P = idempotent_poset(E);
  CHECK(P.idempotents == idx(E, {id3, pa, pb, pc}));
  CHECK(P.minimal == idx(E, {pa, pb, pc}));
  index_t const a = *E.find(pa), u = *E.find(id3);
  CHECK(P.is_below(a, u));
  CHECK(P.is_below(a, a));
  CHECK_FALSE(P.is_below(u, a));
  auto const Z3 = cyclic_group(3);
  CHECK(idempotent_poset(Z3).idempotents == std::vector<index_t>{0});
}

TEST_CASE("kernels and minimal ideals", "[greens]") {
  auto const E = fib();
  CHECK(kernel(E).kernel == idx(E, {pa, pb, pc}));
  CHECK(kernel(E).minimal_left_ideals.size() == 1);
  CHECK(kernel(E).minimal_right_ideals.size() == 3);
  auto const P = FiniteSemigroup::closure({phi});
  CHECK(kernel(P).kernel == idx(P, {pa}));
  CHECK(kernel(cyclic_group(5)).kernel.size() == 5);
  CHECK(kernel(right_zero(2)).minimal_left_ideals.size() == 2);
}

TEST_CASE("complete regularity and normal inverses", "[greens]") {
  auto const E = fib();
  auto const r = is_completely_regular_element(E, *E.find(id3));
  CHECK(r.completely_regular);
  CHECK(*r.witness == *E.find(id3));
  CHECK_FALSE(is_completely_regular_element(E, *E.find(phi)).completely_regular);
  auto const ra = is_completely_regular_element(E, *E.find(pa));
  CHECK(ra.completely_regular);
  CHECK(*ra.witness == *E.find(pa));

  CHECK_FALSE(normal_inverse(E, *E.find(phi)).has_value());
  auto const ni = normal_inverse(E, *E.find(pb));
  REQUIRE(ni);
  CHECK(ni->inverse == *E.find(pb));
  CHECK(ni->zero_power == *E.find(pb));

  Transformation const c{1, 2, 0};
  auto const           C  = FiniteSemigroup::closure({c});
  auto const           nc = normal_inverse(C, *C.find(c));
  REQUIRE(nc);
  CHECK(C.element(nc->inverse) == c * c);
  CHECK(C.element(nc->zero_power).is_identity());

  CHECK(normal_inverse_map(Transformation{1, 2, 0, 0}) == Transformation{2, 0, 1, 1});
  CHECK_THROWS_AS(normal_inverse_map(Transformation{1, 0, 0, 2}), std::invalid_argument);
}

TEST_CASE("normal inverse is the unique commuting generalised inverse", "[greens]") {
  auto const S = FiniteSemigroup::closure(
      {Transformation{1, 0, 2, 3}, Transformation{0, 1, 1, 3}, Transformation{3, 2, 1, 0}});
  for (index_t a = 0; a < S.size(); ++a) {
    std::set<index_t> found;
    for (index_t y = 0; y < S.size(); ++y) {
      if (S.product(S.product(a, y), a) == a && S.product(S.product(y, a), y) == y
          && S.product(a, y) == S.product(y, a)) {
        found.insert(y);
      }
    }
    auto const ni = normal_inverse(S, a);
    if (ni) {
      CHECK(found == std::set<index_t>{ni->inverse});
    } else {
      CHECK(found.empty());
    }
  }
}

TEST_CASE("structure reports", "[greens]") {
  auto const E = fib();
  auto const R = structure_report(E);
  CHECK_FALSE(R.is_completely_regular);
  REQUIRE(R.is_nearly_simple.has_value());
  CHECK_FALSE(*R.is_nearly_simple);
  CHECK(R.non_regular == idx(E, {phi}));
  CHECK(R.units == idx(E, {id3}));

  auto const LZ = FiniteSemigroup::closure({pa, pb, pc});
  auto const L  = structure_report(LZ);
  CHECK(L.is_left_simple);
  CHECK_FALSE(L.is_right_simple);
  CHECK(L.is_completely_simple);
  CHECK(L.is_completely_regular);
  CHECK_FALSE(L.is_nearly_simple.has_value());

  auto const Z = structure_report(cyclic_group(6));
  CHECK(Z.is_group);
  CHECK(Z.is_simple);
  CHECK(Z.is_left_simple);
  CHECK(Z.is_right_simple);
  CHECK(Z.is_completely_simple);
  CHECK(Z.is_completely_regular);
  CHECK(*Z.is_nearly_simple);

  // a nearly simple monoid: units plus kernel
  auto const M = FiniteSemigroup::closure({Transformation{1, 0}, Transformation{0, 0}});
  auto const N = structure_report(M);
  CHECK(*N.is_nearly_simple);
  CHECK(N.is_completely_regular);
}

TEST_CASE("surjective morphisms preserve complete regularity", "[greens]") {
  // Z/6 -> Z/3 and LZ3 x Z2 -> LZ3 (projection)
  auto const S = direct_product(left_zero(3), cyclic_group(2), true);
  CHECK(structure_report(S).is_completely_regular);
  std::vector<std::vector<index_t>> q(3, std::vector<index_t>(3));
  for (index_t a = 0; a < S.size(); ++a)
    for (index_t b = 0; b < S.size(); ++b)
      q[a / 2][b / 2] = S.product(a, b) / 2;
  auto const Q = FiniteSemigroup::from_table(q);
  CHECK(structure_report(Q).is_completely_regular);
}
