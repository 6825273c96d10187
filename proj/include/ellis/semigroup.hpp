#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellis/transformation.hpp"

namespace ellis {

  using index_t = std::uint32_t;

  /// A finite semigroup stored as an element list plus its full Cayley table.
  ///
  /// Elements are either concrete transformations (semigroups built by
  /// `closure`) or opaque indices (semigroups built from a table). In both
  /// cases `product(i, j)` is the index of element i times element j, with
  /// the composition convention of `Transformation` when elements are maps.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    /// The subsemigroup of the full transformation monoid generated by
    /// `generators`. Elements are ordered breadth first by word length over
    /// the generators, ties broken lexicographically by image arrays.
    ///
    /// Throws std::invalid_argument if `generators` is empty or the degrees
    /// differ.
    static FiniteSemigroup closure(std::vector<Transformation> const& generators);

    /// A semigroup given by its multiplication table. The table must be
    /// square, closed and (unless `check_associativity` is false) associative;
    /// otherwise std::invalid_argument is thrown. An empty generator list
    /// means "all elements".
    static FiniteSemigroup from_table(std::vector<std::vector<index_t>> const& table,
                                      std::vector<index_t>     generators = {},
                                      std::vector<std::string> labels     = {},
                                      bool check_associativity          = true);

    [[nodiscard]] std::size_t size() const noexcept {
      return size_;
    }
    [[nodiscard]] index_t product(index_t i, index_t j) const {
      return table_[static_cast<std::size_t>(i) * size_ + j];
    }
    [[nodiscard]] std::span<index_t const> row(index_t i) const {
      return {table_.data() + static_cast<std::size_t>(i) * size_, size_};
    }

    [[nodiscard]] bool has_transformations() const noexcept {
      return !elements_.empty();
    }
    [[nodiscard]] Transformation const& element(index_t i) const;
    [[nodiscard]] std::vector<Transformation> const& elements() const noexcept {
      return elements_;
    }
    [[nodiscard]] std::optional<index_t> find(Transformation const& f) const;

    [[nodiscard]] std::vector<index_t> const& generators() const noexcept {
      return generators_;
    }
    [[nodiscard]] std::optional<index_t> unit() const noexcept {
      return unit_;
    }

    [[nodiscard]] std::string label(index_t i) const;
    void set_labels(std::vector<std::string> labels);

    // Attach the maps behind a table-built semigroup; they must reproduce
    // the table, else std::invalid_argument.
    void set_elements(std::vector<Transformation> elements);

    [[nodiscard]] bool is_idempotent(index_t i) const {
      return product(i, i) == i;
    }

    // Whether `subset` is closed under the product.
    [[nodiscard]] bool is_closed(std::span<index_t const> subset) const;

    // Sorted indices of the subsemigroup generated by `gens`.
    [[nodiscard]] std::vector<index_t> generated_by(std::span<index_t const> gens) const;

    /// The subsemigroup on `subset` (which must be closed), with elements
    /// renumbered in increasing order of their index in this semigroup.
    [[nodiscard]] FiniteSemigroup restrict_to(std::span<index_t const> subset) const;

    [[nodiscard]] std::vector<std::vector<index_t>> table() const;

   private:
    void detect_unit();

    std::size_t                 size_ = 0;
    std::vector<index_t>        table_;
    std::vector<Transformation> elements_;
    std::vector<index_t>        generators_;
    std::vector<std::string>    labels_;
    std::optional<index_t>      unit_;
  };

}  // namespace ellis
