#pragma once

#include <cstddef>

#include "ellis/semigroup.hpp"

namespace ellis {

  // Z/n under addition; element k is labelled "k".
  [[nodiscard]] FiniteSemigroup cyclic_group(std::size_t n);

  // xy = x.
  [[nodiscard]] FiniteSemigroup left_zero(std::size_t n);

  // xy = y.
  [[nodiscard]] FiniteSemigroup right_zero(std::size_t n);

  // Componentwise product; the pair (s, t) has index s * |T| + t.
  [[nodiscard]] FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                               FiniteSemigroup const& T,
                                               bool check_associativity = false);

}  // namespace ellis
