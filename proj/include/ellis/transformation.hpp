#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ellis {

  using point_t = std::uint32_t;

  /// A total map on the point set {0, ..., degree - 1}.
  ///
  /// Products follow the composition convention used throughout the library:
  /// `f * g` is `f` after `g`, i.e. `(f * g)(x) = f(g(x))`.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<point_t> images);
    Transformation(std::initializer_list<point_t> images)
        : Transformation(std::vector<point_t>(images)) {}

    static Transformation identity(std::size_t degree);
    static Transformation constant(std::size_t degree, point_t value);

    [[nodiscard]] std::size_t degree() const noexcept {
      return images_.size();
    }
    [[nodiscard]] point_t operator[](point_t x) const {
      return images_[x];
    }
    [[nodiscard]] std::span<point_t const> images() const noexcept {
      return images_;
    }

    // Sorted, duplicate free.
    [[nodiscard]] std::vector<point_t> image_set() const;
    [[nodiscard]] std::size_t rank() const;
    [[nodiscard]] bool is_identity() const;
    [[nodiscard]] bool is_constant() const;
    [[nodiscard]] bool is_idempotent() const;

    // Whether the restriction to the image is a bijection of the image.
    [[nodiscard]] bool is_bijective_on_image() const;

    // The idempotent power f^k (k >= 1), which exists for every map on a
    // finite set.
    [[nodiscard]] Transformation idempotent_power() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend std::strong_ordering operator<=>(Transformation const& a,
                                            Transformation const& b) {
      return a.images_ <=> b.images_;
    }

   private:
    std::vector<point_t> images_;
  };

  /// f after g. Throws std::invalid_argument on a degree mismatch.
  [[nodiscard]] Transformation compose(Transformation const& f,
                                       Transformation const& g);

  inline Transformation operator*(Transformation const& f,
                                  Transformation const& g) {
    return compose(f, g);
  }

  std::ostream& operator<<(std::ostream& os, Transformation const& f);

  struct TransformationHash {
    std::size_t operator()(Transformation const& f) const noexcept;
  };

}  // namespace ellis
