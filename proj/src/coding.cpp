#include "ellis/coding.hpp"

#include <cmath>
#include <stdexcept>

namespace ellis {

  Segment segment_of(FixedPoint const& x, std::int64_t from, std::int64_t to) {
    return {x.segment(from, to), from};
  }

  std::optional<std::int64_t>
  agreement_radius(Segment const& x, Segment const& y, std::int64_t center) {
    if (!x.covers(center) || !y.covers(center)) {
      throw std::out_of_range("center outside the segments");
    }
    if (x.at(center) != y.at(center)) {
      return -1;
    }
    for (std::int64_t N = 1;; ++N) {
      std::int64_t const lo = center - N, hi = center + N;
      if (!x.covers(lo) || !y.covers(lo) || !x.covers(hi) || !y.covers(hi)) {
        return std::nullopt;
      }
      if (x.at(lo) != y.at(lo) || x.at(hi) != y.at(hi)) {
        return N - 1;
      }
    }
  }

  double window_distance(Segment const& x, Segment const& y, std::int64_t center) {
    auto const N = agreement_radius(x, y, center);
    return N ? std::exp(-static_cast<double>(*N)) : 0.0;
  }

  std::uint32_t BlockAlphabet::code(std::vector<std::uint32_t> const& block) {
    auto [it, _] = codes.emplace(block, static_cast<std::uint32_t>(codes.size()));
    return it->second;
  }

  Segment higher_block_coding(Segment const& x, unsigned r, BlockAlphabet& alphabet) {
    Segment out;
    out.first = x.first + r;
    if (x.word.size() < 2 * static_cast<std::size_t>(r) + 1) {
      return out;
    }
    for (std::size_t i = r; i + r < x.word.size(); ++i) {
      std::vector<std::uint32_t> block(x.word.begin() + static_cast<std::ptrdiff_t>(i - r),
                                       x.word.begin() + static_cast<std::ptrdiff_t>(i + r + 1));
      out.word.push_back(alphabet.code(block));
    }
    return out;
  }

  bool check_coding_equivariance(Segment const& x, unsigned r, std::int64_t max_shift) {
    BlockAlphabet alphabet;
    Segment const coded = higher_block_coding(x, r, alphabet);
    for (std::int64_t k = 0; k <= max_shift; ++k) {
      // shift^k moves position n + k to n
      Segment shifted{x.word, x.first - k};
      Segment const coded_shift = higher_block_coding(shifted, r, alphabet);
      for (std::int64_t n = coded_shift.first; n <= coded_shift.last(); ++n) {
        if (!coded.covers(n + k) || coded_shift.at(n) != coded.at(n + k)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace ellis
