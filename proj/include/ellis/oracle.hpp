#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "ellis/semigroup.hpp"

// Brute-force checks of the semigroup algebra on small exhaustive corpora.
// Everything here is recomputed from raw Cayley tables with set operations
// and only compared against the library at the end.

namespace ellis::oracle {

  struct Failure {
    std::string instance;
    std::string what;
  };

  struct Report {
    std::string            suite;
    std::size_t            instances = 0;
    std::size_t            checks    = 0;
    std::vector<Failure>   failures;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();

    [[nodiscard]] bool passed() const {
      return failures.empty();
    }
    void fail(std::string instance, std::string what);
    // Records one check; returns `ok`.
    bool check(bool ok, std::string const& instance, std::string const& what);
  };

  [[nodiscard]] nlohmann::ordered_json to_json(Report const& r);

  /// All n^n maps of {0..n-1}, in lexicographic order of image arrays.
  /// Throws std::invalid_argument unless 1 <= n <= 4.
  [[nodiscard]] std::vector<Transformation> enumerate_transformations(std::size_t n);

  /// For every map f of degree <= n (all degrees 1..n): an x in the closure
  /// of {f} with fxf = f and fx = xf exists <=> f is bijective on its image
  /// <=> im f = im f^2, and the library agrees.
  [[nodiscard]] Report verify_cpreg_criterion(std::size_t n);

  struct Named {
    std::string     name;
    FiniteSemigroup semigroup;
  };

  struct CorpusOptions {
    std::size_t   max_degree     = 3;   // all closures of <= 2 generators
    std::size_t   random_samples = 40;  // 3-generator closures at degree 4
    std::uint64_t seed           = 20240611;
  };

  /// The closures of one or two maps of degree <= max_degree, seeded random
  /// three-generator closures at degree 4, and a few named tables (LZ3, RZ2,
  /// Z/4, the five-element fiber semigroup).
  [[nodiscard]] std::vector<Named> corpus(CorpusOptions const& opts = {});

  /// Kernel = disjoint union of the minimal left ideals, each containing an
  /// idempotent; the kernel is simple; agreement with `kernel()`.
  [[nodiscard]] Report verify_kernel_structure(std::vector<Named> const& corpus);

  /// Every element completely regular <=> every H-class is a group <=> every
  /// element lies in a cyclic subgroup; agreement with structure_report.
  [[nodiscard]] Report verify_union_of_groups(std::vector<Named> const& corpus);

  struct ReesBounds {
    std::size_t   max_group  = 3;
    std::size_t   max_i      = 3;
    std::size_t   max_lambda = 3;
    // shapes with more sandwich matrices than this are sampled
    std::size_t   exhaustive_limit = 729;
    std::size_t   samples          = 150;
    std::uint64_t seed             = 20240611;
  };

  /// Every sandwich matrix over Z/g (g <= max_group) within the bounds (or
  /// a seeded sample): the matrix semigroup is completely simple, the
  /// decomposition and the normalized presentation are isomorphic to it, and
  /// its idempotents are exactly (i, a_{lambda i}^-1, lambda).
  [[nodiscard]] Report verify_rees_roundtrip(ReesBounds const& bounds = {});

  /// For the completely simple instances of at most `max_size` elements: every
  /// pair of left simple subsemigroups covering S falls under exactly one
  /// alternative (S left simple, or the pair is the two minimal left ideals),
  /// and left_simple_dichotomy reports that alternative.
  [[nodiscard]] Report verify_left_simple_dichotomy(ReesBounds const& bounds = {},
                                                    std::size_t       max_size = 12);

}  // namespace ellis::oracle
