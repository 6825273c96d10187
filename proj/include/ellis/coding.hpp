#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ellis/substitution.hpp"

namespace ellis {

  /// A finite piece of a two-sided sequence: word[i] sits at position
  /// first + i.
  struct Segment {
    std::vector<std::uint32_t> word;
    std::int64_t               first = 0;

    [[nodiscard]] std::int64_t last() const {
      return first + static_cast<std::int64_t>(word.size()) - 1;
    }
    [[nodiscard]] bool covers(std::int64_t n) const {
      return n >= first && n <= last();
    }
    [[nodiscard]] std::uint32_t at(std::int64_t n) const {
      return word.at(static_cast<std::size_t>(n - first));
    }
  };

  [[nodiscard]] Segment segment_of(FixedPoint const& x, std::int64_t from, std::int64_t to);

  /// The largest N with x_k = y_k for all |k - center| <= N, as far as both
  /// segments reach; -1 when x and y differ at the center and nullopt when
  /// they agree on everything both segments cover around the center (the
  /// distance is then only bounded, not known).
  [[nodiscard]] std::optional<std::int64_t>
  agreement_radius(Segment const& x, Segment const& y, std::int64_t center);

  /// exp(-N) for the agreement radius N around `center`; 0 when nullopt.
  [[nodiscard]] double window_distance(Segment const& x, Segment const& y, std::int64_t center);

  /// Dictionary of (2r+1)-blocks shared between several recodings so that
  /// equal blocks get equal codes.
  struct BlockAlphabet {
    std::map<std::vector<std::uint32_t>, std::uint32_t> codes;

    std::uint32_t code(std::vector<std::uint32_t> const& block);
  };

  /// Sliding block code of radius r: y_n is the code of x[n-r .. n+r].
  /// The result covers [first + r, last - r]. Radius 0 with a fresh
  /// alphabet is the identity on the letters.
  [[nodiscard]] Segment higher_block_coding(Segment const& x, unsigned r, BlockAlphabet& alphabet);

  /// recode(shift^k x) = shift^k recode(x) on the common part of the
  /// windows, for every shift 0 <= k <= max_shift.
  [[nodiscard]] bool check_coding_equivariance(Segment const& x,
                                               unsigned       r,
                                               std::int64_t   max_shift);

}  // namespace ellis
