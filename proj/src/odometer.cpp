#include "ellis/odometer.hpp"

#include <stdexcept>

namespace ellis {

  namespace {
    void check(unsigned base) {
      if (base < 2) {
        throw std::invalid_argument("odometer base must be at least 2");
      }
    }
  }  // namespace

  OdometerElement OdometerElement::zero(unsigned base, std::size_t depth) {
    check(base);
    return {base, std::vector<unsigned>(depth, 0)};
  }

  OdometerElement OdometerElement::ones(unsigned base, std::size_t depth) {
    check(base);
    return {base, std::vector<unsigned>(depth, 1)};
  }

  OdometerElement OdometerElement::from_integer(unsigned base, std::size_t depth, std::int64_t n) {
    return odometer_add(zero(base, depth), n);
  }

  std::uint64_t OdometerElement::value() const {
    std::uint64_t v = 0, p = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) {
      std::uint64_t term;
      if (__builtin_mul_overflow(p, digits[i], &term) || __builtin_add_overflow(v, term, &v)) {
        throw std::overflow_error("odometer value does not fit in 64 bits");
      }
      if (i + 1 < digits.size() && __builtin_mul_overflow(p, base, &p)) {
        throw std::overflow_error("odometer value does not fit in 64 bits");
      }
    }
    return v;
  }

  std::string OdometerElement::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      out += (i ? "," : "") + std::to_string(digits[i]);
    }
    return out + ")";
  }

  OdometerElement odometer_add(OdometerElement const& z, std::int64_t n) {
    check(z.base);
    OdometerElement out = z;
    auto const      b   = static_cast<std::int64_t>(z.base);
    // n = sum of base-b digits of |n| with the sign carried along
    std::int64_t carry = n;
    for (std::size_t i = 0; i < out.digits.size() && carry != 0; ++i) {
      std::int64_t d = static_cast<std::int64_t>(out.digits[i]) + carry % b;
      carry /= b;
      if (d >= b) {
        d -= b;
        ++carry;
      } else if (d < 0) {
        d += b;
        --carry;
      }
      out.digits[i] = static_cast<unsigned>(d);
    }
    return out;
  }

  OdometerElement odometer_add(OdometerElement const& z, OdometerElement const& w) {
    if (z.base != w.base || z.depth() != w.depth()) {
      throw std::invalid_argument("odometer elements of different shape");
    }
    OdometerElement out   = z;
    unsigned        carry = 0;
    for (std::size_t i = 0; i < z.depth(); ++i) {
      unsigned const d = z.digits[i] + w.digits[i] + carry;
      out.digits[i]    = d % z.base;
      carry            = d / z.base;
    }
    return out;
  }

}  // namespace ellis
