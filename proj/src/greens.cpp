#include "ellis/greens.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ellis/detail/scc.hpp"
#include "ellis/error.hpp"

namespace ellis {

  namespace {

    std::vector<index_t> class_index(std::vector<std::vector<index_t>> const& classes,
                                     std::size_t                              n) {
      std::vector<index_t> of(n, 0);
      for (index_t c = 0; c < classes.size(); ++c) {
        for (index_t x : classes[c]) {
          of[x] = c;
        }
      }
      return of;
    }

    bool contains(std::vector<index_t> const& sorted, index_t x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    }

  }  // namespace

  GreensStructure greens(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    GreensStructure   G;

    // a L b iff a and b are mutually reachable by left multiplications.
    auto left = detail::strongly_connected_components(n, [&S, n](std::uint32_t a) {
      std::vector<std::uint32_t> out(n);
      for (index_t s = 0; s < n; ++s) {
        out[s] = S.product(s, a);
      }
      return out;
    });
    auto right = detail::strongly_connected_components(n, [&S](std::uint32_t a) {
      auto r = S.row(a);
      return std::vector<std::uint32_t>(r.begin(), r.end());
    });
    auto both = detail::strongly_connected_components(n, [&S, n](std::uint32_t a) {
      std::vector<std::uint32_t> out;
      out.reserve(2 * n);
      for (index_t s = 0; s < n; ++s) {
        out.push_back(S.product(s, a));
        out.push_back(S.product(a, s));
      }
      return out;
    });

    G.l_classes = detail::classes_from_labels(left);
    G.r_classes = detail::classes_from_labels(right);
    G.d_classes = detail::classes_from_labels(both);
    G.l_of      = class_index(G.l_classes, n);
    G.r_of      = class_index(G.r_classes, n);
    G.d_of      = class_index(G.d_classes, n);

    std::map<std::pair<index_t, index_t>, index_t> lr;
    std::vector<std::uint32_t>                     h_label(n);
    for (index_t x = 0; x < n; ++x) {
      auto [it, _] = lr.emplace(std::make_pair(G.l_of[x], G.r_of[x]),
                                static_cast<index_t>(lr.size()));
      h_label[x] = it->second;
    }
    G.h_classes = detail::classes_from_labels(h_label);
    G.h_of      = class_index(G.h_classes, n);

    for (index_t d = 0; d < G.d_classes.size(); ++d) {
      GreensStructure::EggBox box;
      box.d_class = d;
      for (index_t x : G.d_classes[d]) {
        if (std::find(box.rows.begin(), box.rows.end(), G.r_of[x]) == box.rows.end()) {
          box.rows.push_back(G.r_of[x]);
        }
        if (std::find(box.cols.begin(), box.cols.end(), G.l_of[x]) == box.cols.end()) {
          box.cols.push_back(G.l_of[x]);
        }
      }
      std::sort(box.rows.begin(), box.rows.end());
      std::sort(box.cols.begin(), box.cols.end());
      box.cells.assign(box.rows.size(), std::vector<index_t>(box.cols.size()));
      for (std::size_t r = 0; r < box.rows.size(); ++r) {
        for (std::size_t c = 0; c < box.cols.size(); ++c) {
          auto it = lr.find({box.cols[c], box.rows[r]});
          if (it == lr.end()) {
            throw ConsistencyError("empty L/R intersection inside a D-class");
          }
          // Translate the insertion label into the sorted H-class id.
          for (index_t x : G.d_classes[d]) {
            if (G.l_of[x] == box.cols[c] && G.r_of[x] == box.rows[r]) {
              box.cells[r][c] = G.h_of[x];
              break;
            }
          }
        }
      }
      G.eggbox.push_back(std::move(box));
    }
    return G;
  }

  bool IdempotentPoset::is_below(index_t p, index_t q) const {
    return std::find(leq.begin(), leq.end(), std::make_pair(p, q)) != leq.end();
  }

  IdempotentPoset idempotent_poset(FiniteSemigroup const& S) {
    IdempotentPoset P;
    for (index_t x = 0; x < S.size(); ++x) {
      if (S.is_idempotent(x)) {
        P.idempotents.push_back(x);
      }
    }
    for (index_t p : P.idempotents) {
      for (index_t q : P.idempotents) {
        if (S.product(p, q) == p && S.product(q, p) == p) {
          P.leq.emplace_back(p, q);
        }
      }
    }
    for (index_t p : P.idempotents) {
      bool minimal = true;
      for (index_t q : P.idempotents) {
        if (q != p && S.product(q, p) == q && S.product(p, q) == q) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        P.minimal.push_back(p);
      }
    }
    return P;
  }

  KernelData kernel(FiniteSemigroup const& S) {
    return kernel(S, greens(S));
  }

  KernelData kernel(FiniteSemigroup const& S, GreensStructure const& G) {
    std::size_t const n = S.size();
    // The kernel is the unique D-class closed under multiplication by S on
    // both sides (the minimum of the J-order).
    std::optional<index_t> minimum;
    for (index_t d = 0; d < G.d_classes.size(); ++d) {
      index_t const a      = G.d_classes[d].front();
      bool          is_min = true;
      for (index_t s = 0; s < n && is_min; ++s) {
        is_min = G.d_of[S.product(s, a)] == d && G.d_of[S.product(a, s)] == d;
      }
      if (is_min) {
        if (minimum) {
          throw ConsistencyError("two J-minimal classes found");
        }
        minimum = d;
      }
    }
    if (!minimum) {
      throw ConsistencyError("no minimal ideal found");
    }

    KernelData K;
    K.kernel = G.d_classes[*minimum];
    for (auto const& box : G.eggbox) {
      if (box.d_class != *minimum) {
        continue;
      }
      for (index_t l : box.cols) {
        K.minimal_left_ideals.push_back(G.l_classes[l]);
      }
      for (index_t r : box.rows) {
        K.minimal_right_ideals.push_back(G.r_classes[r]);
      }
    }

    std::vector<index_t> covered;
    for (auto const& L : K.minimal_left_ideals) {
      for (index_t x : L) {
        for (index_t s = 0; s < n; ++s) {
          if (!contains(L, S.product(s, x))) {
            throw ConsistencyError("minimal left ideal not closed under left "
                                   "multiplication");
          }
        }
      }
      if (std::none_of(L.begin(), L.end(), [&S](index_t x) {
            return S.is_idempotent(x);
          })) {
        throw ConsistencyError("minimal left ideal without an idempotent");
      }
      covered.insert(covered.end(), L.begin(), L.end());
    }
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end()
        || covered != K.kernel) {
      throw ConsistencyError("kernel is not the disjoint union of its minimal "
                             "left ideals");
    }
    return K;
  }

  bool is_group(FiniteSemigroup const& S, std::span<index_t const> subset) {
    if (subset.empty() || !S.is_closed(subset)) {
      return false;
    }
    std::optional<index_t> identity;
    for (index_t e : subset) {
      if (std::all_of(subset.begin(), subset.end(), [&](index_t x) {
            return S.product(e, x) == x && S.product(x, e) == x;
          })) {
        identity = e;
        break;
      }
    }
    if (!identity) {
      return false;
    }
    return std::all_of(subset.begin(), subset.end(), [&](index_t x) {
      return std::any_of(subset.begin(), subset.end(), [&](index_t y) {
        return S.product(x, y) == *identity && S.product(y, x) == *identity;
      });
    });
  }

  RegularityResult is_completely_regular_element(FiniteSemigroup const& S, index_t a) {
    RegularityResult res;
    for (index_t x = 0; x < S.size(); ++x) {
      index_t const ax = S.product(a, x);
      if (ax == S.product(x, a) && S.product(ax, a) == a) {
        res.completely_regular = true;
        res.witness            = x;
        break;
      }
    }
    if (S.has_transformations()) {
      auto const& f         = S.element(a);
      bool const  bijective = f.is_bijective_on_image();
      bool const  same_image = f.image_set() == (f * f).image_set();
      if (bijective != res.completely_regular || same_image != res.completely_regular) {
        throw ConsistencyError("complete regularity criteria disagree for "
                               + f.to_string());
      }
    }
    return res;
  }

  Transformation normal_inverse_map(Transformation const& f) {
    if (!f.is_bijective_on_image()) {
      throw std::invalid_argument(f.to_string() + " is not bijective on its image");
    }
    std::vector<point_t> inv(f.degree(), 0);
    for (point_t y : f.image_set()) {
      inv[f[y]] = y;
    }
    std::vector<point_t> g(f.degree());
    for (point_t x = 0; x < f.degree(); ++x) {
      g[x] = inv[inv[f[x]]];
    }
    return Transformation(std::move(g));
  }

  std::optional<NormalInverse> normal_inverse(FiniteSemigroup const& S, index_t a) {
    auto const reg = is_completely_regular_element(S, a);
    if (!reg.completely_regular) {
      return std::nullopt;
    }
    index_t const x = *reg.witness;
    index_t const y = S.product(S.product(x, a), x);
    index_t const ay = S.product(a, y);
    if (S.product(ay, a) != a || S.product(S.product(y, a), y) != y
        || ay != S.product(y, a)) {
      throw ConsistencyError("normal inverse construction failed for element "
                             + S.label(a));
    }
    if (S.has_transformations()) {
      auto g = normal_inverse_map(S.element(a));
      if (g != S.element(y)) {
        throw ConsistencyError("normal inverse of " + S.label(a)
                               + " differs from the restriction formula");
      }
    }
    return NormalInverse{y, ay};
  }

  StructureReport structure_report(FiniteSemigroup const& S) {
    return structure_report(S, greens(S));
  }

  StructureReport structure_report(FiniteSemigroup const& S, GreensStructure const& G) {
    std::size_t const n = S.size();
    StructureReport   R;
    auto              K = kernel(S, G);
    R.kernel               = K.kernel;
    R.minimal_left_ideals  = K.minimal_left_ideals;
    R.minimal_right_ideals = K.minimal_right_ideals;

    R.is_simple       = R.kernel.size() == n;
    R.is_left_simple  = R.is_simple && R.minimal_left_ideals.size() == 1;
    R.is_right_simple = R.is_simple && R.minimal_right_ideals.size() == 1;

    auto const P  = idempotent_poset(S);
    R.idempotents = P.idempotents;
    R.is_completely_simple = R.is_simple && !P.minimal.empty();

    for (index_t a = 0; a < n; ++a) {
      if (!is_completely_regular_element(S, a).completely_regular) {
        R.non_regular.push_back(a);
      }
    }
    bool const by_elements = R.non_regular.empty();
    bool const by_h_classes
        = std::all_of(G.h_classes.begin(), G.h_classes.end(), [&S](auto const& H) {
            return is_group(S, H);
          });
    if (by_elements != by_h_classes) {
      throw ConsistencyError("complete regularity by elements and by H-classes "
                             "disagree");
    }
    R.is_completely_regular = by_elements;

    if (auto u = S.unit()) {
      for (index_t a = 0; a < n; ++a) {
        for (index_t b = 0; b < n; ++b) {
          if (S.product(a, b) == *u && S.product(b, a) == *u) {
            R.units.push_back(a);
            break;
          }
        }
      }
      R.is_group = R.units.size() == n;
      std::vector<index_t> both(R.units);
      both.insert(both.end(), R.kernel.begin(), R.kernel.end());
      std::sort(both.begin(), both.end());
      both.erase(std::unique(both.begin(), both.end()), both.end());
      R.is_nearly_simple = both.size() == n;
    }
    return R;
  }

}  // namespace ellis
