#include "ellis/transformation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ellis {

  Transformation::Transformation(std::vector<point_t> images)
      : images_(std::move(images)) {
    if (images_.empty()) {
      throw std::invalid_argument("a transformation must have degree >= 1");
    }
    for (point_t y : images_) {
      if (y >= images_.size()) {
        throw std::invalid_argument("image " + std::to_string(y)
                                    + " out of range for degree "
                                    + std::to_string(images_.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<point_t> im(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      im[i] = static_cast<point_t>(i);
    }
    return Transformation(std::move(im));
  }

  Transformation Transformation::constant(std::size_t degree, point_t value) {
    return Transformation(std::vector<point_t>(degree, value));
  }

  std::vector<point_t> Transformation::image_set() const {
    std::vector<point_t> im(images_);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  std::size_t Transformation::rank() const {
    return image_set().size();
  }

  bool Transformation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != i) {
        return false;
      }
    }
    return true;
  }

  bool Transformation::is_constant() const {
    return std::all_of(images_.begin(), images_.end(), [this](point_t y) {
      return y == images_.front();
    });
  }

  bool Transformation::is_idempotent() const {
    return std::all_of(images_.begin(), images_.end(), [this](point_t y) {
      return images_[y] == y;
    });
  }

  bool Transformation::is_bijective_on_image() const {
    auto const          im = image_set();
    std::vector<bool>   hit(images_.size(), false);
    for (point_t y : im) {
      hit[images_[y]] = true;
    }
    return std::all_of(im.begin(), im.end(), [&hit](point_t y) {
      return hit[y];
    });
  }

  Transformation Transformation::idempotent_power() const {
    Transformation p = *this;
    while (!p.is_idempotent()) {
      p = p * *this;
    }
    return p;
  }

  std::string Transformation::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw std::invalid_argument("cannot compose transformations of degree "
                                  + std::to_string(f.degree()) + " and "
                                  + std::to_string(g.degree()));
    }
    std::vector<point_t> im(g.degree());
    for (std::size_t x = 0; x < im.size(); ++x) {
      im[x] = f[g[static_cast<point_t>(x)]];
    }
    return Transformation(std::move(im));
  }

  std::ostream& operator<<(std::ostream& os, Transformation const& f) {
    os << '[';
    for (std::size_t i = 0; i < f.degree(); ++i) {
      os << (i == 0 ? "" : " ") << f[static_cast<point_t>(i)];
    }
    return os << ']';
  }

  std::size_t TransformationHash::operator()(
      Transformation const& f) const noexcept {
    std::size_t h = f.degree();
    for (point_t y : f.images()) {
      h = h * 1000003u ^ (y + 0x9e3779b9u + (h << 6) + (h >> 2));
    }
    return h;
  }

}  // namespace ellis
