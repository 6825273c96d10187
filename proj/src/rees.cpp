#include "ellis/rees.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ellis/error.hpp"
#include "ellis/greens.hpp"

namespace ellis {

  void ReesData::validate() const {
    if (i_count == 0 || lambda_count == 0) {
      throw std::invalid_argument("Rees data needs non-empty I and Lambda");
    }
    if (identity >= group.size() || group.unit() != identity) {
      throw std::invalid_argument("Rees data identity is not the group unit");
    }
    std::vector<index_t> all(group.size());
    for (index_t g = 0; g < group.size(); ++g) {
      all[g] = g;
    }
    if (!is_group(group, all)) {
      throw std::invalid_argument("Rees data structure group is not a group");
    }
    if (sandwich.size() != lambda_count) {
      throw std::invalid_argument("sandwich matrix must have |Lambda| rows");
    }
    for (auto const& row : sandwich) {
      if (row.size() != i_count) {
        throw std::invalid_argument("sandwich matrix must have |I| columns");
      }
      for (index_t a : row) {
        if (a >= group.size()) {
          throw std::invalid_argument("sandwich entry is not a group element");
        }
      }
    }
  }

  index_t ReesData::inverse(index_t g) const {
    for (index_t h = 0; h < group.size(); ++h) {
      if (group.product(g, h) == identity) {
        return h;
      }
    }
    throw std::invalid_argument("group element without inverse");
  }

  bool ReesData::is_normalized() const {
    for (std::size_t i = 0; i < i_count; ++i) {
      if (sandwich[0][i] != identity) {
        return false;
      }
    }
    for (std::size_t l = 0; l < lambda_count; ++l) {
      if (sandwich[l][0] != identity) {
        return false;
      }
    }
    return true;
  }

  ReesData make_rees_data(FiniteSemigroup group, std::vector<std::vector<index_t>> sandwich) {
    ReesData d;
    if (!group.unit()) {
      throw std::invalid_argument("structure group has no identity");
    }
    d.identity     = *group.unit();
    d.group        = std::move(group);
    d.lambda_count = sandwich.size();
    d.i_count      = sandwich.empty() ? 0 : sandwich.front().size();
    d.sandwich     = std::move(sandwich);
    d.validate();
    d.normalized = d.is_normalized();
    return d;
  }

  ReesElement rees_multiply(ReesData const& d, ReesElement x, ReesElement y) {
    auto check = [&d](ReesElement e) {
      if (e.i >= d.i_count || e.g >= d.group.size() || e.lambda >= d.lambda_count) {
        throw std::out_of_range("Rees triple out of range");
      }
    };
    check(x);
    check(y);
    index_t const mid = d.group.product(x.g, d.sandwich[x.lambda][y.i]);
    return {x.i, d.group.product(mid, y.g), y.lambda};
  }

  index_t rees_index(ReesData const& d, ReesElement x) {
    return static_cast<index_t>((x.i * d.group.size() + x.g) * d.lambda_count + x.lambda);
  }

  ReesElement rees_element(ReesData const& d, index_t k) {
    index_t const lambda = static_cast<index_t>(k % d.lambda_count);
    k /= static_cast<index_t>(d.lambda_count);
    index_t const g = static_cast<index_t>(k % d.group.size());
    return {static_cast<index_t>(k / d.group.size()), g, lambda};
  }

  FiniteSemigroup matrix_semigroup(ReesData const& d) {
    std::size_t const                 n = d.size();
    std::vector<std::vector<index_t>> t(n, std::vector<index_t>(n));
    std::vector<std::string>          labels(n);
    for (index_t a = 0; a < n; ++a) {
      ReesElement const x = rees_element(d, a);
      labels[a] = "(" + std::to_string(x.i) + "," + d.group.label(x.g) + ","
                  + std::to_string(x.lambda) + ")";
      for (index_t b = 0; b < n; ++b) {
        t[a][b] = rees_index(d, rees_multiply(d, x, rees_element(d, b)));
      }
    }
    return FiniteSemigroup::from_table(t, {}, std::move(labels), false);
  }

  namespace {

    void verify_isomorphism(FiniteSemigroup const&      A,
                            FiniteSemigroup const&      B,
                            std::vector<index_t> const& map,
                            char const*                 what) {
      if (A.size() != B.size() || map.size() != A.size()) {
        throw ConsistencyError(std::string(what) + ": sizes differ");
      }
      std::vector<bool> hit(B.size(), false);
      for (index_t y : map) {
        if (y >= B.size() || hit[y]) {
          throw ConsistencyError(std::string(what) + ": map is not a bijection");
        }
        hit[y] = true;
      }
      for (index_t x = 0; x < A.size(); ++x) {
        for (index_t y = 0; y < A.size(); ++y) {
          if (map[A.product(x, y)] != B.product(map[x], map[y])) {
            throw ConsistencyError(std::string(what) + ": map is not a morphism");
          }
        }
      }
    }

  }  // namespace

  ReesDecomposition rees_decompose(FiniteSemigroup const& S) {
    auto const G = greens(S);
    auto const R = structure_report(S, G);
    if (!R.is_completely_simple) {
      throw std::invalid_argument("rees_decompose requires a completely simple semigroup");
    }
    ReesDecomposition out;
    index_t const     e = R.idempotents.front();
    out.idempotent      = e;
    out.group_elements  = G.h_classes[G.h_of[e]];

    FiniteSemigroup group = S.restrict_to(out.group_elements);
    std::vector<index_t> local(S.size(), 0);
    for (index_t k = 0; k < out.group_elements.size(); ++k) {
      local[out.group_elements[k]] = k;
    }

    out.r_classes.resize(G.r_classes.size());
    out.l_classes.resize(G.l_classes.size());
    for (index_t k = 0; k < G.r_classes.size(); ++k) {
      out.r_classes[k] = k;
    }
    for (index_t k = 0; k < G.l_classes.size(); ++k) {
      out.l_classes[k] = k;
    }

    // r_i in R_i ^ L_e and q_lambda in R_e ^ L_lambda; e anchors its own
    // classes.
    auto pick = [&](index_t r, index_t l) -> index_t {
      if (r == G.r_of[e] && l == G.l_of[e]) {
        return e;
      }
      for (index_t x : G.r_classes[r]) {
        if (G.l_of[x] == l) {
          return x;
        }
      }
      throw ConsistencyError("empty H-class in a completely simple semigroup");
    };
    std::vector<index_t> rep_i, rep_lambda;
    for (index_t r = 0; r < G.r_classes.size(); ++r) {
      rep_i.push_back(pick(r, G.l_of[e]));
    }
    for (index_t l = 0; l < G.l_classes.size(); ++l) {
      rep_lambda.push_back(pick(G.r_of[e], l));
    }

    std::vector<std::vector<index_t>> sandwich(rep_lambda.size(),
                                               std::vector<index_t>(rep_i.size()));
    for (std::size_t l = 0; l < rep_lambda.size(); ++l) {
      for (std::size_t i = 0; i < rep_i.size(); ++i) {
        index_t const p = S.product(rep_lambda[l], rep_i[i]);
        if (G.h_of[p] != G.h_of[e]) {
          throw ConsistencyError("sandwich entry outside the structure group");
        }
        sandwich[l][i] = local[p];
      }
    }
    out.data = make_rees_data(std::move(group), std::move(sandwich));

    out.to_semigroup.resize(out.data.size());
    for (index_t k = 0; k < out.data.size(); ++k) {
      ReesElement const x = rees_element(out.data, k);
      out.to_semigroup[k] = S.product(
          S.product(rep_i[x.i], out.group_elements[x.g]), rep_lambda[x.lambda]);
    }
    verify_isomorphism(matrix_semigroup(out.data), S, out.to_semigroup, "rees_decompose");
    return out;
  }

  ReesData rees_normalize(ReesData const& d) {
    d.validate();
    auto const& Gp  = d.group;
    auto        inv = [&d](index_t g) { return d.inverse(g); };

    // b_{lambda i} = u_lambda a_{lambda i} v_i with v_i = a_{0 i}^-1 and
    // u_lambda = (a_{lambda 0} v_0)^-1.
    std::vector<index_t> v(d.i_count), u(d.lambda_count);
    for (std::size_t i = 0; i < d.i_count; ++i) {
      v[i] = inv(d.sandwich[0][i]);
    }
    for (std::size_t l = 0; l < d.lambda_count; ++l) {
      u[l] = inv(Gp.product(d.sandwich[l][0], v[0]));
    }
    ReesData out  = d;
    for (std::size_t l = 0; l < d.lambda_count; ++l) {
      for (std::size_t i = 0; i < d.i_count; ++i) {
        out.sandwich[l][i] = Gp.product(Gp.product(u[l], d.sandwich[l][i]), v[i]);
      }
    }
    out.normalized = out.is_normalized();
    if (!out.normalized) {
      throw ConsistencyError("normalization left a non-identity entry");
    }

    std::vector<index_t> psi(d.size());
    for (index_t k = 0; k < d.size(); ++k) {
      ReesElement const x = rees_element(d, k);
      index_t const     g = Gp.product(Gp.product(inv(v[x.i]), x.g), inv(u[x.lambda]));
      psi[k]              = rees_index(out, {x.i, g, x.lambda});
    }
    verify_isomorphism(matrix_semigroup(d), matrix_semigroup(out), psi, "rees_normalize");
    return out;
  }

  Dichotomy left_simple_dichotomy(FiniteSemigroup const&   S,
                                  std::span<index_t const> S1,
                                  std::span<index_t const> S2) {
    auto const report = structure_report(S);
    if (!report.is_completely_simple) {
      throw std::invalid_argument("dichotomy: S is not completely simple");
    }
    auto sorted = [](std::span<index_t const> X) {
      std::vector<index_t> v(X.begin(), X.end());
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    };
    auto const A = sorted(S1);
    auto const B = sorted(S2);
    for (auto const* part : {&A, &B}) {
      if (part->empty() || part->back() >= S.size() || !S.is_closed(*part)) {
        throw std::invalid_argument("dichotomy: part is not a subsemigroup");
      }
      if (!structure_report(S.restrict_to(*part)).is_left_simple) {
        throw std::invalid_argument("dichotomy: part is not left simple");
      }
    }
    std::vector<index_t> both;
    std::set_union(A.begin(), A.end(), B.begin(), B.end(), std::back_inserter(both));
    if (both.size() != S.size()) {
      throw std::invalid_argument("dichotomy: parts do not cover S");
    }

    std::vector<index_t> common;
    std::set_intersection(A.begin(), A.end(), B.begin(), B.end(),
                          std::back_inserter(common));
    auto const& mins = report.minimal_left_ideals;
    bool const  second
        = common.empty() && mins.size() == 2
          && ((mins[0] == A && mins[1] == B) || (mins[0] == B && mins[1] == A));
    if (report.is_left_simple == second) {
      throw ConsistencyError(report.is_left_simple
                                 ? "dichotomy: both alternatives hold"
                                 : "dichotomy: neither alternative holds");
    }
    return report.is_left_simple ? Dichotomy::left_simple
                                 : Dichotomy::two_minimal_left_ideals;
  }

  namespace {

    using Signature = std::tuple<bool, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

    std::vector<Signature> signatures(FiniteSemigroup const& S) {
      auto const             G = greens(S);
      std::vector<Signature> out(S.size());
      for (index_t a = 0; a < S.size(); ++a) {
        // index and period of the monogenic subsemigroup <a>
        std::vector<index_t> powers{a};
        std::vector<int>     seen(S.size(), -1);
        seen[a] = 0;
        std::size_t index = 0, period = 0;
        for (index_t p = a;;) {
          p = S.product(p, a);
          if (seen[p] >= 0) {
            index  = static_cast<std::size_t>(seen[p]) + 1;
            period = powers.size() - static_cast<std::size_t>(seen[p]);
            break;
          }
          seen[p] = static_cast<int>(powers.size());
          powers.push_back(p);
        }
        out[a] = {S.is_idempotent(a),
                  G.l_classes[G.l_of[a]].size(),
                  G.r_classes[G.r_of[a]].size(),
                  G.h_classes[G.h_of[a]].size(),
                  index,
                  period};
      }
      return out;
    }

    std::vector<index_t> small_generating_set(FiniteSemigroup const& S) {
      std::vector<index_t> gens;
      std::vector<bool>    covered(S.size(), false);
      for (index_t a = 0; a < S.size(); ++a) {
        if (covered[a]) {
          continue;
        }
        gens.push_back(a);
        covered.assign(S.size(), false);
        for (index_t x : S.generated_by(gens)) {
          covered[x] = true;
        }
      }
      return gens;
    }

    // Extend an assignment of generator images along the right Cayley graph.
    // Returns false if the assignment is not a well defined injective
    // morphism on the generated subsemigroup.
    bool extend(FiniteSemigroup const&      S,
                FiniteSemigroup const&      T,
                std::vector<index_t> const& gens,
                std::vector<index_t> const& images,
                std::vector<index_t>&       map,
                std::vector<bool>&          used) {
      constexpr index_t kUnset = UINT32_MAX;
      map.assign(S.size(), kUnset);
      used.assign(T.size(), false);
      std::vector<index_t> queue;
      for (std::size_t k = 0; k < images.size(); ++k) {
        if (map[gens[k]] != kUnset) {
          if (map[gens[k]] != images[k]) {
            return false;
          }
          continue;
        }
        if (used[images[k]]) {
          return false;
        }
        map[gens[k]]    = images[k];
        used[images[k]] = true;
        queue.push_back(gens[k]);
      }
      for (std::size_t q = 0; q < queue.size(); ++q) {
        index_t const x = queue[q];
        for (std::size_t k = 0; k < images.size(); ++k) {
          index_t const y   = S.product(x, gens[k]);
          index_t const img = T.product(map[x], images[k]);
          if (map[y] != kUnset) {
            if (map[y] != img) {
              return false;
            }
          } else {
            if (used[img]) {
              return false;
            }
            map[y]    = img;
            used[img] = true;
            queue.push_back(y);
          }
        }
      }
      return true;
    }

  }  // namespace

  std::optional<std::vector<index_t>> find_isomorphism(FiniteSemigroup const& S,
                                                       FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    auto const sig_s = signatures(S);
    auto const sig_t = signatures(T);
    {
      auto a = sig_s, b = sig_t;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) {
        return std::nullopt;
      }
    }
    auto const           gens = small_generating_set(S);
    std::vector<index_t> images;
    std::vector<index_t> map;
    std::vector<bool>    used;

    auto search = [&](auto&& self, std::size_t k) -> bool {
      if (k == gens.size()) {
        return extend(S, T, gens, images, map, used)
               && std::all_of(used.begin(), used.end(), [](bool b) { return b; });
      }
      for (index_t t = 0; t < T.size(); ++t) {
        if (sig_t[t] != sig_s[gens[k]]) {
          continue;
        }
        images.push_back(t);
        if (extend(S, T, gens, images, map, used) && self(self, k + 1)) {
          return true;
        }
        images.pop_back();
      }
      return false;
    };
    if (search(search, 0)) {
      extend(S, T, gens, images, map, used);
      return map;
    }
    return std::nullopt;
  }

}  // namespace ellis
