#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ellis/semigroup.hpp"

namespace ellis {

  /// Presentation M[G; I, Lambda; A] of a completely simple semigroup. The
  /// sets I and Lambda are {0, ..., |I| - 1} and {0, ..., |Lambda| - 1};
  /// `sandwich[lambda][i]` is the entry a_{lambda i} of the Lambda x I matrix.
  struct ReesData {
    FiniteSemigroup                   group;
    index_t                           identity = 0;
    std::size_t                       i_count  = 0;
    std::size_t                       lambda_count = 0;
    std::vector<std::vector<index_t>> sandwich;
    bool                              normalized = false;

    /// Throws std::invalid_argument unless `group` is a group with identity
    /// `identity` and the matrix has the right shape and valid entries.
    void validate() const;

    [[nodiscard]] index_t inverse(index_t g) const;

    // Row 0 and column 0 of the sandwich matrix are all the identity.
    [[nodiscard]] bool is_normalized() const;

    [[nodiscard]] std::size_t size() const {
      return i_count * group.size() * lambda_count;
    }
  };

  /// Builds ReesData from a group and matrix, validating it and computing the
  /// normalized flag.
  [[nodiscard]] ReesData make_rees_data(FiniteSemigroup                   group,
                                        std::vector<std::vector<index_t>> sandwich);

  struct ReesElement {
    index_t i;
    index_t g;
    index_t lambda;

    friend auto operator<=>(ReesElement const&, ReesElement const&) = default;
  };

  /// (i, g, lambda)(j, h, mu) = (i, g a_{lambda j} h, mu). Throws
  /// std::out_of_range for indices outside I, G or Lambda.
  [[nodiscard]] ReesElement rees_multiply(ReesData const& d, ReesElement x, ReesElement y);

  // Position of (i, g, lambda) in `matrix_semigroup(d)`.
  [[nodiscard]] index_t     rees_index(ReesData const& d, ReesElement x);
  [[nodiscard]] ReesElement rees_element(ReesData const& d, index_t k);

  /// The matrix semigroup as an explicit table, elements ordered
  /// lexicographically by (i, g, lambda).
  [[nodiscard]] FiniteSemigroup matrix_semigroup(ReesData const& d);

  struct ReesDecomposition {
    ReesData data;
    // to_semigroup[rees_index(x)] is the element of S corresponding to x.
    std::vector<index_t> to_semigroup;
    // The idempotent whose H-class is used as the structure group, and the
    // elements of that H-class in group order.
    index_t              idempotent = 0;
    std::vector<index_t> group_elements;
    // I is the list of R-classes, Lambda the list of L-classes (ids from
    // greens()).
    std::vector<index_t> r_classes;
    std::vector<index_t> l_classes;
  };

  /// Rees-Suskevitch decomposition of a completely simple semigroup. The
  /// returned bijection is verified against both Cayley tables (throws
  /// ConsistencyError on failure). Throws std::invalid_argument when S is not
  /// completely simple.
  [[nodiscard]] ReesDecomposition rees_decompose(FiniteSemigroup const& S);

  /// An isomorphic presentation whose row 0 and column 0 are the identity.
  /// The isomorphism (i, g, lambda) -> (i, v_i^-1 g u_lambda^-1, lambda) is
  /// verified table by table.
  [[nodiscard]] ReesData rees_normalize(ReesData const& d);

  enum class Dichotomy { left_simple, two_minimal_left_ideals };

  /// Decide which alternative holds for a completely simple S covered by two
  /// left simple subsemigroups S1 and S2: either S is left simple, or S1 and
  /// S2 are disjoint and are exactly the minimal left ideals of S.
  ///
  /// Precondition failures throw std::invalid_argument; if neither
  /// alternative holds a ConsistencyError is thrown.
  [[nodiscard]] Dichotomy left_simple_dichotomy(FiniteSemigroup const&   S,
                                                std::span<index_t const> S1,
                                                std::span<index_t const> S2);

  /// An isomorphism S -> T (as a vector of images) or nullopt. Backtracks over
  /// images of a small generating set of S, pruning by element signatures
  /// (idempotency, Green's class sizes, index and period).
  [[nodiscard]] std::optional<std::vector<index_t>>
  find_isomorphism(FiniteSemigroup const& S, FiniteSemigroup const& T);

}  // namespace ellis
