#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellis/greens.hpp"
#include "ellis/rees.hpp"
#include "ellis/semigroup.hpp"
#include "ellis/substitution.hpp"

namespace ellis {

  /// Finite shadow of the fiber preserving part of the Ellis semigroup,
  /// acting on the fixed points of shift o theta (identified with their
  /// seeds; point i of every map is seeds[i]).
  ///
  /// A column tuple T (T[i] = x_{seeds[i]}[m]) gives the fiber map
  /// i -> e(T[i]) where e is the idempotent power of column 1, i.e. the
  /// limit of theta~^k applied to shift^m.
  struct FiberSemigroup {
    std::vector<letter_t> seeds;
    Transformation        column_one_power;  // e, on letters

    std::vector<ColumnMap> columns_all, columns_positive, columns_negative;

    // closure of the fiber maps of all occurring columns and the identity
    FiniteSemigroup base;
    // maps the closure added beyond the generators (none expected)
    std::size_t closure_added = 0;

    // Sorted indices into `base` of the forward and backward shadows, the
    // closures of the fiber maps of the recurrent columns on each side.
    std::vector<index_t> forward, backward;

    [[nodiscard]] Transformation fiber_map(Word const& tuple) const;
    [[nodiscard]] std::optional<index_t> find(Word const& tuple) const;
  };

  /// Throws AnalysisDeclined when there are no seeds, or when column 1 has
  /// periodic letters that are not fixed (the fiber maps would then depend
  /// on the power of theta~ taken).
  [[nodiscard]] FiberSemigroup build_fiber_semigroup(Substitution const& theta);

  /// The Cayley table of the fiber semigroup as cayley_to_json gives it, with
  /// the element labels added under "labels".
  [[nodiscard]] nlohmann::ordered_json cayley_of_fiber(Substitution const& theta);

  /// (forward, backward) recurrent-column shadows as semigroups in their own
  /// right, labelled like the base semigroup.
  [[nodiscard]] std::pair<FiniteSemigroup, FiniteSemigroup>
  directional_shadows(FiberSemigroup const& F);

  /// "id", "Pi_<seed>" for constant maps, "swap" for a lone non-identity
  /// permutation (else "perm_1", ...), "phi" for the remaining map (else
  /// "phi_1", "phi_2", ...), numbered in element order.
  [[nodiscard]] std::vector<std::string> fiber_labels(Substitution const&   theta,
                                                      FiberSemigroup const& F);

  struct KernelModel {
    std::vector<index_t> fiber_kernel;  // in FiberSemigroup::base
    std::size_t          r = 0;
    unsigned             base  = 2;
    unsigned             depth = 0;           // requested K
    unsigned             explicit_depth = 0;  // depth of the explicit table
    FiniteSemigroup      product;             // LZ_r x Z/l^explicit_depth
    StructureReport      report;
    ReesDecomposition    rees;
    bool                 group_cyclic = false;  // G isomorphic to Z/l^k
  };

  /// LZ_r x Z/l^K with its structure report and Rees decomposition. The
  /// explicit table is built for the largest depth k <= K with
  /// r * l^k <= max_elements. Throws AnalysisDeclined unless the kernel of
  /// the fiber semigroup is a left zero semigroup of constant maps.
  [[nodiscard]] KernelModel kernel_model(Substitution const&   theta,
                                         FiberSemigroup const& F,
                                         unsigned              K,
                                         std::size_t           max_elements = 2048);

  struct CrossCheck {
    std::string name;
    bool        passed = true;
    std::string detail;
  };

  struct DirectionSummary {
    Direction                       direction = Direction::forward;
    std::vector<PairClassification> pairs;
    bool                            almost_distal          = true;
    bool                            proximality_transitive = true;
    bool                            has_li_yorke           = false;
    std::vector<index_t>            shadow_kernel;
  };

  struct WitnessMap {
    index_t  element;            // in FiberSemigroup::base
    letter_t s, t;               // the Li-Yorke pair (seeds)
    letter_t image_s, image_t;   // f(s) != f(t), an asymptotic pair
    Direction direction;
  };

  struct ClassificationReport {
    bool             minimality_guaranteed = true;  // primitive substitution
    DirectionSummary forward, backward;
    bool             proximality_transitive = true;  // two-sided, on computed pairs

    // Predictions; empty when minimality is not guaranteed.
    std::optional<bool>        predicted_almost_distal;
    std::optional<bool>        predicted_nearly_simple;
    std::optional<bool>        predicted_completely_regular;
    std::optional<std::size_t> predicted_minimal_left_ideals;

    // Computed on the fiber semigroup.
    bool                    fiber_completely_regular = true;
    std::optional<bool>     fiber_nearly_simple;
    std::size_t             fiber_minimal_left_ideals = 0;
    std::vector<index_t>    non_regular;
    bool                    directional_kernels_equal = false;
    std::optional<index_t>  witness;  // a non completely regular element
    std::vector<WitnessMap> witness_maps;

    std::vector<CrossCheck> checks;

    [[nodiscard]] bool consistent() const;
  };

  [[nodiscard]] ClassificationReport classify_system(Substitution const&   theta,
                                                     FiberSemigroup const& F,
                                                     WitnessOptions const& opts = {});

  /// An element f of the directional shadow with f(s) != f(t) where
  /// (f(s), f(t)) is an asymptotic pair in the same direction. Such f is not
  /// injective on its image; this is checked. Throws std::invalid_argument
  /// unless (s, t) is a Li-Yorke pair in that direction; nullopt when the
  /// shadow holds no such map.
  [[nodiscard]] std::optional<WitnessMap> li_yorke_witness_map(Substitution const&   theta,
                                                               FiberSemigroup const& F,
                                                               letter_t              s,
                                                               letter_t              t,
                                                               Direction             dir);

  struct Stratum {
    std::string              name;
    std::string              description;
    std::vector<std::string> fiber_maps;  // labels of the fiber maps involved
    std::optional<std::string> count;     // e.g. "1 x 5^8"
    bool                     symbolic = false;
  };

  struct FullModel {
    std::vector<Stratum>     strata;
    bool                     periodic = false;
    std::optional<bool>      middle_products_in_kernel;
    std::vector<std::string> assumptions;
  };

  [[nodiscard]] FullModel full_model_report(Substitution const&         theta,
                                            FiberSemigroup const&       F,
                                            ClassificationReport const& C,
                                            std::optional<KernelModel> const& M,
                                            unsigned                    K);

  struct AnalysisOptions {
    unsigned     depth          = 8;
    std::int64_t window         = 0;  // 0: l^6
    std::size_t  witnesses      = 5;
    std::size_t  kernel_elements = 2048;
  };

  struct Analysis {
    Substitution                theta;
    std::vector<letter_t>       seeds;
    FiberSemigroup              fiber;
    std::vector<std::string>    labels;
    ClassificationReport        classification;
    std::optional<KernelModel>  kernel;
    std::string                 kernel_declined;
    FullModel                   model;
    AnalysisOptions             options;
  };

  /// The whole pipeline. Throws AnalysisDeclined when the fiber semigroup
  /// cannot be built.
  [[nodiscard]] Analysis analyze(Substitution const& theta, AnalysisOptions const& opts = {});

  [[nodiscard]] nlohmann::ordered_json to_json(Analysis const& a);
  [[nodiscard]] std::string           text_summary(Analysis const& a);
  [[nodiscard]] std::string           fiber_dot(Analysis const& a);

  struct GoldenCheck {
    std::string name;
    bool        passed = false;
    std::string detail;
  };

  /// The fourteen facts of the worked three-letter example, checked on the
  /// given substitution (normally the bundled one).
  [[nodiscard]] std::vector<GoldenCheck> golden_checks(Substitution const& theta);

}  // namespace ellis
