#pragma once

#include <string>

#include "json.hpp"

#include "ellis/semigroup.hpp"

namespace ellis {

  /// {"elements": [...], "table": [[...]], "generators": [...]}. Elements are
  /// image arrays for transformation semigroups and labels otherwise.
  [[nodiscard]] nlohmann::ordered_json cayley_to_json(FiniteSemigroup const& S);

  /// Inverse of cayley_to_json. Elements given as integer arrays are read as
  /// transformations and must agree with the table; strings become labels.
  /// Throws std::invalid_argument on malformed input.
  [[nodiscard]] FiniteSemigroup cayley_from_json(nlohmann::json const& j);

  /// Egg-box diagrams in Graphviz syntax: one cluster per D-class, an HTML
  /// table of H-classes inside, group H-classes shaded.
  [[nodiscard]] std::string eggbox_dot(FiniteSemigroup const& S,
                                       std::string const&     name = "S");

}  // namespace ellis
