#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ellis {

  /// An element of the l-adic integers truncated to K digits, least
  /// significant digit first. Arithmetic is modulo l^K.
  struct OdometerElement {
    unsigned              base = 2;
    std::vector<unsigned> digits;

    static OdometerElement zero(unsigned base, std::size_t depth);
    // The point with every digit equal to 1.
    static OdometerElement ones(unsigned base, std::size_t depth);
    static OdometerElement from_integer(unsigned base, std::size_t depth, std::int64_t n);

    [[nodiscard]] std::size_t depth() const noexcept {
      return digits.size();
    }
    // The representative in [0, l^K). Throws std::overflow_error if l^K does
    // not fit in 64 bits.
    [[nodiscard]] std::uint64_t value() const;
    [[nodiscard]] std::string   to_string() const;

    friend bool operator==(OdometerElement const&, OdometerElement const&) = default;
  };

  /// z + n with carries (and borrows for negative n), truncated to K digits.
  [[nodiscard]] OdometerElement odometer_add(OdometerElement const& z, std::int64_t n);

  /// Digit-wise sum of two elements with carry.
  [[nodiscard]] OdometerElement odometer_add(OdometerElement const& z,
                                             OdometerElement const& w);

}  // namespace ellis
