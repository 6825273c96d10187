#include "ellis/semigroup.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace ellis {

  FiniteSemigroup
  FiniteSemigroup::closure(std::vector<Transformation> const& generators) {
    if (generators.empty()) {
      throw std::invalid_argument("closure of an empty generator list");
    }
    std::size_t const degree = generators.front().degree();
    for (auto const& g : generators) {
      if (g.degree() != degree) {
        throw std::invalid_argument("generators of different degrees");
      }
    }

    std::unordered_map<Transformation, index_t, TransformationHash> index;
    FiniteSemigroup                                                 S;

    // Level 1 is the set of distinct generators, sorted.
    std::vector<Transformation> level(generators);
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
    while (!level.empty()) {
      for (auto& f : level) {
        index.emplace(f, static_cast<index_t>(S.elements_.size()));
        S.elements_.push_back(std::move(f));
      }
      std::size_t const first = S.elements_.size() - level.size();
      std::vector<Transformation> next;
      for (std::size_t i = first; i < S.elements_.size(); ++i) {
        for (auto const& g : generators) {
          Transformation h = S.elements_[i] * g;
          if (!index.contains(h)) {
            next.push_back(std::move(h));
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      level = std::move(next);
    }

    S.size_ = S.elements_.size();
    S.table_.resize(S.size_ * S.size_);
    for (std::size_t i = 0; i < S.size_; ++i) {
      for (std::size_t j = 0; j < S.size_; ++j) {
        S.table_[i * S.size_ + j] = index.at(S.elements_[i] * S.elements_[j]);
      }
    }
    for (auto const& g : generators) {
      index_t const gi = index.at(g);
      if (std::find(S.generators_.begin(), S.generators_.end(), gi)
          == S.generators_.end()) {
        S.generators_.push_back(gi);
      }
    }
    S.detect_unit();
    return S;
  }

  FiniteSemigroup
  FiniteSemigroup::from_table(std::vector<std::vector<index_t>> const& table,
                              std::vector<index_t>                     generators,
                              std::vector<std::string>                 labels,
                              bool check_associativity) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw std::invalid_argument("empty Cayley table");
    }
    FiniteSemigroup S;
    S.size_ = n;
    S.table_.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw std::invalid_argument("Cayley table is not square");
      }
      for (index_t x : row) {
        if (x >= n) {
          throw std::invalid_argument("Cayley table entry "
                                      + std::to_string(x) + " out of range");
        }
        S.table_.push_back(x);
      }
    }
    if (check_associativity) {
      for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < n; ++j) {
          index_t const ij = S.product(i, j);
          for (index_t k = 0; k < n; ++k) {
            if (S.product(ij, k) != S.product(i, S.product(j, k))) {
              throw std::invalid_argument(
                  "Cayley table is not associative at ("
                  + std::to_string(i) + ", " + std::to_string(j) + ", "
                  + std::to_string(k) + ")");
            }
          }
        }
      }
    }
    if (generators.empty()) {
      generators.resize(n);
      for (index_t i = 0; i < n; ++i) {
        generators[i] = i;
      }
    }
    for (index_t g : generators) {
      if (g >= n) {
        throw std::invalid_argument("generator index out of range");
      }
    }
    if (S.generated_by(generators).size() != n) {
      throw std::invalid_argument("generators do not generate the table");
    }
    S.generators_ = std::move(generators);
    if (!labels.empty()) {
      S.set_labels(std::move(labels));
    }
    S.detect_unit();
    return S;
  }

  Transformation const& FiniteSemigroup::element(index_t i) const {
    if (elements_.empty()) {
      throw std::logic_error("semigroup has no transformation elements");
    }
    return elements_.at(i);
  }

  std::optional<index_t> FiniteSemigroup::find(Transformation const& f) const {
    auto it = std::find(elements_.begin(), elements_.end(), f);
    if (it == elements_.end()) {
      return std::nullopt;
    }
    return static_cast<index_t>(it - elements_.begin());
  }

  std::string FiniteSemigroup::label(index_t i) const {
    if (!labels_.empty()) {
      return labels_.at(i);
    }
    if (!elements_.empty()) {
      return elements_.at(i).to_string();
    }
    return "e" + std::to_string(i);
  }

  void FiniteSemigroup::set_labels(std::vector<std::string> labels) {
    if (labels.size() != size_) {
      throw std::invalid_argument("label count does not match semigroup size");
    }
    labels_ = std::move(labels);
  }

  void FiniteSemigroup::set_elements(std::vector<Transformation> elements) {
    if (elements.size() != size_) {
      throw std::invalid_argument("element count does not match semigroup size");
    }
    for (index_t a = 0; a < size_; ++a) {
      for (index_t b = 0; b < size_; ++b) {
        if (elements[product(a, b)] != elements[a] * elements[b]) {
          throw std::invalid_argument("table disagrees with composition at (" + std::to_string(a)
                                      + ", " + std::to_string(b) + ")");
        }
      }
    }
    elements_ = std::move(elements);
    detect_unit();
  }

  bool FiniteSemigroup::is_closed(std::span<index_t const> subset) const {
    std::vector<bool> in(size_, false);
    for (index_t x : subset) {
      in[x] = true;
    }
    for (index_t x : subset) {
      for (index_t y : subset) {
        if (!in[product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<index_t>
  FiniteSemigroup::generated_by(std::span<index_t const> gens) const {
    std::vector<bool>    in(size_, false);
    std::vector<index_t> out;
    for (index_t g : gens) {
      if (!in[g]) {
        in[g] = true;
        out.push_back(g);
      }
    }
    // Every element of the closure is a word w * g with g a generator.
    for (std::size_t k = 0; k < out.size(); ++k) {
      for (index_t g : gens) {
        index_t const p = product(out[k], g);
        if (!in[p]) {
          in[p] = true;
          out.push_back(p);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  FiniteSemigroup
  FiniteSemigroup::restrict_to(std::span<index_t const> subset) const {
    std::vector<index_t> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.empty() || !is_closed(sorted)) {
      throw std::invalid_argument("subset is not a subsemigroup");
    }
    std::vector<index_t> local(size_, 0);
    for (index_t k = 0; k < sorted.size(); ++k) {
      local[sorted[k]] = k;
    }
    FiniteSemigroup T;
    T.size_ = sorted.size();
    T.table_.resize(T.size_ * T.size_);
    for (std::size_t a = 0; a < T.size_; ++a) {
      for (std::size_t b = 0; b < T.size_; ++b) {
        T.table_[a * T.size_ + b] = local[product(sorted[a], sorted[b])];
      }
    }
    for (index_t x : sorted) {
      if (!elements_.empty()) {
        T.elements_.push_back(elements_[x]);
      }
      if (!labels_.empty()) {
        T.labels_.push_back(labels_[x]);
      }
    }
    T.generators_.resize(T.size_);
    for (index_t k = 0; k < T.size_; ++k) {
      T.generators_[k] = k;
    }
    T.detect_unit();
    return T;
  }

  std::vector<std::vector<index_t>> FiniteSemigroup::table() const {
    std::vector<std::vector<index_t>> t(size_);
    for (index_t i = 0; i < size_; ++i) {
      auto r = row(i);
      t[i].assign(r.begin(), r.end());
    }
    return t;
  }

  void FiniteSemigroup::detect_unit() {
    unit_.reset();
    for (index_t e = 0; e < size_; ++e) {
      bool ok = true;
      for (index_t x = 0; x < size_ && ok; ++x) {
        ok = product(e, x) == x && product(x, e) == x;
      }
      if (ok) {
        unit_ = e;
        return;
      }
    }
  }

}  // namespace ellis
