#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ellis/semigroup.hpp"

namespace ellis {

  /// Green's L, R, H and D classes of a finite semigroup.
  ///
  /// Classes are lists of element indices, sorted, and the class lists are
  /// ordered by smallest member. `*_of[x]` is the class id of element x.
  struct GreensStructure {
    std::vector<std::vector<index_t>> l_classes;
    std::vector<std::vector<index_t>> r_classes;
    std::vector<std::vector<index_t>> h_classes;
    std::vector<std::vector<index_t>> d_classes;
    std::vector<index_t>              l_of, r_of, h_of, d_of;

    // One egg-box per D-class: rows are R-classes, columns L-classes and
    // cells[row][col] the H-class at their intersection.
    struct EggBox {
      index_t                           d_class;
      std::vector<index_t>              rows;
      std::vector<index_t>              cols;
      std::vector<std::vector<index_t>> cells;
    };
    std::vector<EggBox> eggbox;
  };

  /// L-classes are the classes of equal principal left ideals {a} u Sa,
  /// R-classes those of {a} u aS, H = L ^ R and D = J.
  [[nodiscard]] GreensStructure greens(FiniteSemigroup const& S);

  struct IdempotentPoset {
    std::vector<index_t>                      idempotents;
    // (p, q) with p <= q, i.e. p = pq = qp. Reflexive pairs included.
    std::vector<std::pair<index_t, index_t>>  leq;
    std::vector<index_t>                      minimal;

    [[nodiscard]] bool is_below(index_t p, index_t q) const;
  };

  [[nodiscard]] IdempotentPoset idempotent_poset(FiniteSemigroup const& S);

  struct KernelData {
    std::vector<index_t>              kernel;
    std::vector<std::vector<index_t>> minimal_left_ideals;
    std::vector<std::vector<index_t>> minimal_right_ideals;
  };

  /// The minimal two-sided ideal together with the minimal one-sided ideals.
  /// Throws ConsistencyError if the kernel is not the disjoint union of its
  /// minimal left ideals or a minimal left ideal lacks an idempotent.
  [[nodiscard]] KernelData kernel(FiniteSemigroup const& S);
  [[nodiscard]] KernelData kernel(FiniteSemigroup const& S, GreensStructure const& G);

  // Whether `subset` (sorted or not) is a group under the product of S.
  [[nodiscard]] bool is_group(FiniteSemigroup const& S, std::span<index_t const> subset);

  struct RegularityResult {
    bool                   completely_regular = false;
    std::optional<index_t> witness;  // some x with a = axa and ax = xa
  };

  /// Search for x in S with a = axa and ax = xa. For transformation
  /// semigroups the answer is cross-checked against bijectivity on the image
  /// and im a = im a^2; a disagreement throws ConsistencyError.
  [[nodiscard]] RegularityResult is_completely_regular_element(FiniteSemigroup const& S,
                                                               index_t                a);

  struct NormalInverse {
    index_t inverse;
    index_t zero_power;  // a * inverse, an idempotent
  };

  /// The unique generalised inverse of `a` commuting with `a`, or nullopt if
  /// `a` is not completely regular.
  [[nodiscard]] std::optional<NormalInverse> normal_inverse(FiniteSemigroup const& S,
                                                            index_t                a);

  /// For a map that is bijective on its image: g = r^-2 * f where r is the
  /// restriction of f to its image. Throws std::invalid_argument otherwise.
  [[nodiscard]] Transformation normal_inverse_map(Transformation const& f);

  struct StructureReport {
    bool                              is_group             = false;
    bool                              is_left_simple       = false;
    bool                              is_right_simple      = false;
    bool                              is_simple            = false;
    bool                              is_completely_simple = false;
    bool                              is_completely_regular = false;
    // nullopt when the semigroup has no unit.
    std::optional<bool>               is_nearly_simple;
    std::vector<index_t>              kernel;
    std::vector<std::vector<index_t>> minimal_left_ideals;
    std::vector<std::vector<index_t>> minimal_right_ideals;
    std::vector<index_t>              units;
    std::vector<index_t>              idempotents;
    std::vector<index_t>              non_regular;  // elements failing complete regularity
  };

  [[nodiscard]] StructureReport structure_report(FiniteSemigroup const& S);
  [[nodiscard]] StructureReport structure_report(FiniteSemigroup const& S,
                                                 GreensStructure const& G);

}  // namespace ellis
