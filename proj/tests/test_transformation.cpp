#include "catch_amalgamated.hpp"

#include <stdexcept>

#include "ellis/transformation.hpp"

using ellis::Transformation;

namespace {
  // a, b, c as 0, 1, 2
  Transformation const phi{0, 0, 1};
  Transformation const pa{0, 0, 0};
  Transformation const pb{1, 1, 1};
}  // namespace

TEST_CASE("construction validates images", "[transformation]") {
  CHECK_THROWS_AS(Transformation(std::vector<ellis::point_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(Transformation({0, 3, 1}), std::invalid_argument);
  CHECK(Transformation::identity(3) == Transformation{0, 1, 2});
  CHECK(Transformation::constant(3, 2) == Transformation{2, 2, 2});
}

TEST_CASE("composition applies the right factor first", "[transformation]") {
  auto const id = Transformation::identity(3);
  CHECK(id * phi == phi);
  CHECK(phi * id == phi);
  CHECK(phi * phi == pa);
  CHECK(pb * phi == pb);
  CHECK(phi * pb == pa);
  // c -> b then b -> a, i.e. f(g(x))
  Transformation const f{1, 2, 0}, g{2, 2, 1};
  auto const           h = f * g;
  for (ellis::point_t x = 0; x < 3; ++x) {
    CHECK(h[x] == f[g[x]]);
  }
  CHECK_THROWS_AS(compose(f, Transformation{0, 1}), std::invalid_argument);
}

TEST_CASE("composition is associative on all degree 3 triples", "[transformation]") {
  std::vector<Transformation> all;
  for (ellis::point_t a = 0; a < 3; ++a)
    for (ellis::point_t b = 0; b < 3; ++b)
      for (ellis::point_t c = 0; c < 3; ++c)
        all.push_back(Transformation{a, b, c});
  std::size_t bad = 0;
  for (auto const& f : all)
    for (auto const& g : all)
      for (auto const& h : all)
        bad += (f * g) * h != f * (g * h);
  CHECK(bad == 0);
}

TEST_CASE("image-based predicates", "[transformation]") {
  CHECK(phi.image_set() == std::vector<ellis::point_t>{0, 1});
  CHECK((phi * phi).image_set() == std::vector<ellis::point_t>{0});
  CHECK_FALSE(phi.is_bijective_on_image());
  CHECK(pa.is_bijective_on_image());
  CHECK(pa.is_idempotent());
  CHECK(pa.is_constant());
  CHECK(phi.rank() == 2);
  CHECK(phi.idempotent_power() == pa);
  Transformation const cyc{1, 2, 0};
  CHECK(cyc.idempotent_power().is_identity());
  CHECK(phi.to_string() == "[0 0 1]");
}
