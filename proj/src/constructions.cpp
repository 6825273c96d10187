#include "ellis/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ellis {

  namespace {
    void require_positive(std::size_t n) {
      if (n == 0) {
        throw std::invalid_argument("semigroup order must be positive");
      }
    }
  }  // namespace

  FiniteSemigroup cyclic_group(std::size_t n) {
    require_positive(n);
    std::vector<std::vector<index_t>> t(n, std::vector<index_t>(n));
    std::vector<std::string>          labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = std::to_string(i);
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<index_t>((i + j) % n);
      }
    }
    return FiniteSemigroup::from_table(t, {}, std::move(labels), false);
  }

  FiniteSemigroup left_zero(std::size_t n) {
    require_positive(n);
    std::vector<std::vector<index_t>> t(n, std::vector<index_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<index_t>(i);
      }
    }
    return FiniteSemigroup::from_table(t, {}, {}, false);
  }

  FiniteSemigroup right_zero(std::size_t n) {
    require_positive(n);
    std::vector<std::vector<index_t>> t(n, std::vector<index_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<index_t>(j);
      }
    }
    return FiniteSemigroup::from_table(t, {}, {}, false);
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& S,
                                 FiniteSemigroup const& T,
                                 bool                   check_associativity) {
    std::size_t const                 m = S.size(), n = T.size(), N = m * n;
    std::vector<std::vector<index_t>> t(N, std::vector<index_t>(N));
    std::vector<std::string>          labels(N);
    for (index_t a = 0; a < m; ++a) {
      for (index_t b = 0; b < n; ++b) {
        std::size_t const x = a * n + b;
        labels[x]           = "(" + S.label(a) + "," + T.label(b) + ")";
        for (index_t c = 0; c < m; ++c) {
          for (index_t d = 0; d < n; ++d) {
            t[x][c * n + d] = static_cast<index_t>(S.product(a, c) * n + T.product(b, d));
          }
        }
      }
    }
    return FiniteSemigroup::from_table(t, {}, std::move(labels), check_associativity);
  }

}  // namespace ellis
