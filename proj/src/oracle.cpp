#include "ellis/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "ellis/greens.hpp"
#include "ellis/rees.hpp"

namespace ellis::oracle {

  void Report::fail(std::string instance, std::string what) {
    failures.push_back({std::move(instance), std::move(what)});
  }

  bool Report::check(bool ok, std::string const& instance, std::string const& what) {
    ++checks;
    if (!ok) {
      fail(instance, what);
    }
    return ok;
  }

  nlohmann::ordered_json to_json(Report const& r) {
    nlohmann::ordered_json j;
    j["suite"]     = r.suite;
    j["instances"] = r.instances;
    j["checks"]    = r.checks;
    j["counts"]    = r.counts;
    auto f         = nlohmann::ordered_json::array();
    for (auto const& x : r.failures) {
      f.push_back({{"instance", x.instance}, {"what", x.what}});
    }
    j["failures"] = std::move(f);
    j["passed"]   = r.passed();
    return j;
  }

  namespace {

    using Set   = std::vector<index_t>;  // sorted
    using Table = std::vector<std::vector<index_t>>;

    Set sorted(std::set<index_t> const& s) {
      return {s.begin(), s.end()};
    }

    bool subset(Set const& a, Set const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    Set everything(std::size_t n) {
      Set s(n);
      for (std::size_t i = 0; i < n; ++i) {
        s[i] = static_cast<index_t>(i);
      }
      return s;
    }

    // {a} u Sa
    Set left_ideal(Table const& T, index_t a) {
      std::set<index_t> s{a};
      for (auto const& row : T) {
        s.insert(row[a]);
      }
      return sorted(s);
    }

    // {a} u aS
    Set right_ideal(Table const& T, index_t a) {
      std::set<index_t> s(T[a].begin(), T[a].end());
      s.insert(a);
      return sorted(s);
    }

    // S^1 a S^1
    Set two_sided_ideal(Table const& T, index_t a) {
      auto              l = left_ideal(T, a);
      std::set<index_t> s(l.begin(), l.end());
      for (index_t x : l) {
        s.insert(T[x].begin(), T[x].end());
      }
      return sorted(s);
    }

    // Minimal members (under inclusion) of a family, without repetition.
    std::vector<Set> minimal_sets(std::vector<Set> family) {
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
      std::vector<Set> out;
      for (auto const& a : family) {
        bool minimal = true;
        for (auto const& b : family) {
          if (b != a && subset(b, a)) {
            minimal = false;
            break;
          }
        }
        if (minimal) {
          out.push_back(a);
        }
      }
      return out;
    }

    std::string set_text(Set const& s) {
      std::string out = "{";
      for (std::size_t i = 0; i < s.size(); ++i) {
        out += (i ? "," : "") + std::to_string(s[i]);
      }
      return out + "}";
    }

    bool is_group_naive(Table const& T, Set const& H) {
      for (index_t x : H) {
        for (index_t y : H) {
          if (!std::binary_search(H.begin(), H.end(), T[x][y])) {
            return false;
          }
        }
      }
      for (index_t e : H) {
        bool unit = std::all_of(H.begin(), H.end(),
                                [&](index_t x) { return T[e][x] == x && T[x][e] == x; });
        if (!unit) {
          continue;
        }
        return std::all_of(H.begin(), H.end(), [&](index_t x) {
          return std::any_of(H.begin(), H.end(),
                             [&](index_t y) { return T[x][y] == e && T[y][x] == e; });
        });
      }
      return false;
    }

    bool left_simple_naive(Table const& T, Set const& U) {
      for (index_t a : U) {
        std::set<index_t> ua;
        for (index_t u : U) {
          ua.insert(T[u][a]);
        }
        if (sorted(ua) != U) {
          return false;
        }
      }
      return true;
    }

    bool closed_naive(Table const& T, Set const& U) {
      for (index_t x : U) {
        for (index_t y : U) {
          if (!std::binary_search(U.begin(), U.end(), T[x][y])) {
            return false;
          }
        }
      }
      return true;
    }

    // Whether `map` is a bijective homomorphism between the two tables.
    bool is_isomorphism(Table const& A, Table const& B, std::vector<index_t> const& map) {
      if (A.size() != B.size() || map.size() != A.size()) {
        return false;
      }
      std::set<index_t> img(map.begin(), map.end());
      if (img.size() != map.size() || *img.rbegin() >= B.size()) {
        return false;
      }
      for (std::size_t x = 0; x < A.size(); ++x) {
        for (std::size_t y = 0; y < A.size(); ++y) {
          if (map[A[x][y]] != B[map[x]][map[y]]) {
            return false;
          }
        }
      }
      return true;
    }

    // Rees matrix semigroup over a group given by its table, with identity
    // `e`; element (i, g, lambda) at (i * |G| + g) * |Lambda| + lambda.
    Table rees_table(Table const& G, std::vector<std::vector<index_t>> const& A, std::size_t I,
                     std::size_t L) {
      std::size_t const n = G.size();
      Table             T(I * n * L, std::vector<index_t>(I * n * L));
      auto idx = [&](std::size_t i, std::size_t g, std::size_t l) {
        return static_cast<index_t>((i * n + g) * L + l);
      };
      for (std::size_t i = 0; i < I; ++i)
        for (std::size_t g = 0; g < n; ++g)
          for (std::size_t l = 0; l < L; ++l)
            for (std::size_t j = 0; j < I; ++j)
              for (std::size_t h = 0; h < n; ++h)
                for (std::size_t m = 0; m < L; ++m) {
                  T[idx(i, g, l)][idx(j, h, m)] = idx(i, G[G[g][A[l][j]]][h], m);
                }
      return T;
    }

    Table cyclic_table(std::size_t n) {
      Table T(n, std::vector<index_t>(n));
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          T[a][b] = static_cast<index_t>((a + b) % n);
        }
      }
      return T;
    }

    std::string shape_text(std::size_t g, std::size_t I, std::size_t L,
                           std::vector<std::vector<index_t>> const& A) {
      std::string s = "Z/" + std::to_string(g) + " I=" + std::to_string(I) + " L=" + std::to_string(L) + " A=[";
      for (std::size_t l = 0; l < A.size(); ++l) {
        s += (l ? ";" : "");
        for (std::size_t i = 0; i < A[l].size(); ++i) {
          s += (i ? "," : "") + std::to_string(A[l][i]);
        }
      }
      return s + "]";
    }

    struct Instance {
      std::size_t                       g, I, L;
      std::vector<std::vector<index_t>> A;
    };

    // All sandwich matrices within the bounds, sampled per shape above the limit.
    std::vector<Instance> rees_instances(ReesBounds const& b) {
      std::vector<Instance> out;
      std::mt19937_64       rng(b.seed);
      for (std::size_t g = 1; g <= b.max_group; ++g) {
        for (std::size_t I = 1; I <= b.max_i; ++I) {
          for (std::size_t L = 1; L <= b.max_lambda; ++L) {
            std::size_t const cells = I * L;
            std::size_t       total = 1;
            bool              big   = false;
            for (std::size_t c = 0; c < cells; ++c) {
              total *= g;
              big = big || total > b.exhaustive_limit;
            }
            auto make = [&](std::size_t code) {
              Instance x{g, I, L, std::vector<std::vector<index_t>>(L, std::vector<index_t>(I))};
              for (std::size_t l = 0; l < L; ++l) {
                for (std::size_t i = 0; i < I; ++i) {
                  x.A[l][i] = static_cast<index_t>(code % g);
                  code /= g;
                }
              }
              return x;
            };
            if (!big) {
              for (std::size_t code = 0; code < total; ++code) {
                out.push_back(make(code));
              }
            } else {
              for (std::size_t k = 0; k < b.samples; ++k) {
                Instance x{g, I, L, std::vector<std::vector<index_t>>(L, std::vector<index_t>(I))};
                for (auto& row : x.A) {
                  for (auto& v : row) {
                    v = static_cast<index_t>(rng() % g);
                  }
                }
                out.push_back(std::move(x));
              }
            }
          }
        }
      }
      return out;
    }

  }  // namespace

  std::vector<Transformation> enumerate_transformations(std::size_t n) {
    if (n < 1 || n > 4) {
      throw std::invalid_argument("enumerate_transformations: degree must be in 1..4");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= n;
    }
    std::vector<Transformation> out;
    out.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<point_t> img(n);
      std::size_t          c = code;
      for (std::size_t i = n; i-- > 0;) {
        img[i] = static_cast<point_t>(c % n);
        c /= n;
      }
      out.emplace_back(std::move(img));
    }
    return out;
  }

  Report verify_cpreg_criterion(std::size_t n) {
    Report rep;
    rep.suite = "cpreg";
    for (std::size_t d = 1; d <= n; ++d) {
      std::size_t regular = 0;
      for (auto const& f : enumerate_transformations(d)) {
        ++rep.instances;
        auto apply = [d](std::vector<point_t> const& a, std::vector<point_t> const& b) {
          std::vector<point_t> c(d);
          for (std::size_t i = 0; i < d; ++i) {
            c[i] = a[b[i]];
          }
          return c;
        };
        std::vector<point_t> const fv(f.images().begin(), f.images().end());
        // the powers of f
        std::vector<std::vector<point_t>> powers{fv};
        for (;;) {
          auto next = apply(powers.back(), fv);
          if (std::find(powers.begin(), powers.end(), next) != powers.end()) {
            break;
          }
          powers.push_back(std::move(next));
        }
        std::size_t commuting_inverses = 0;
        for (auto const& x : powers) {
          bool const gen  = apply(apply(fv, x), fv) == fv;
          bool const comm = apply(fv, x) == apply(x, fv);
          bool const back = apply(apply(x, fv), x) == x;
          commuting_inverses += gen && comm && back;
        }
        bool const A = std::any_of(powers.begin(), powers.end(), [&](auto const& x) {
          return apply(apply(fv, x), fv) == fv && apply(fv, x) == apply(x, fv);
        });
        std::set<point_t> im(fv.begin(), fv.end()), fim;
        for (point_t p : im) {
          fim.insert(fv[p]);
        }
        bool const B = fim.size() == im.size();
        auto       f2 = apply(fv, fv);
        bool const C  = std::set<point_t>(f2.begin(), f2.end()) == im;

        std::string const name = f.to_string();
        rep.check(A == B && B == C, name, "criteria disagree");
        rep.check(!A || commuting_inverses == 1, name, "commuting inverse not unique");

        auto S   = FiniteSemigroup::closure({f});
        auto idx = S.find(f);
        rep.check(idx && is_completely_regular_element(S, *idx).completely_regular == A, name,
                  "library complete regularity differs");
        rep.check(f.is_bijective_on_image() == B, name, "library bijectivity on image differs");
        rep.check(idx && normal_inverse(S, *idx).has_value() == A, name,
                  "library normal inverse differs");
        regular += A;
      }
      rep.counts["degree_" + std::to_string(d)] = {{"maps", enumerate_transformations(d).size()},
                                                    {"completely_regular", regular}};
    }
    return rep;
  }

  std::vector<Named> corpus(CorpusOptions const& opts) {
    std::vector<Named> out;
    for (std::size_t d = 1; d <= opts.max_degree; ++d) {
      auto maps = enumerate_transformations(d);
      for (std::size_t i = 0; i < maps.size(); ++i) {
        out.push_back({"<" + maps[i].to_string() + ">", FiniteSemigroup::closure({maps[i]})});
        for (std::size_t j = i + 1; j < maps.size(); ++j) {
          out.push_back({"<" + maps[i].to_string() + "," + maps[j].to_string() + ">",
                         FiniteSemigroup::closure({maps[i], maps[j]})});
        }
      }
    }
    std::mt19937_64 rng(opts.seed);
    for (std::size_t k = 0; k < opts.random_samples; ++k) {
      std::vector<Transformation> gens;
      std::string                 name = "<";
      for (int g = 0; g < 3; ++g) {
        std::vector<point_t> img(4);
        for (auto& p : img) {
          p = static_cast<point_t>(rng() % 4);
        }
        gens.emplace_back(img);
        name += (g ? "," : "") + gens.back().to_string();
      }
      out.push_back({name + ">", FiniteSemigroup::closure(gens)});
    }
    Table lz(3, std::vector<index_t>(3)), rz(2, std::vector<index_t>(2));
    for (index_t x = 0; x < 3; ++x) {
      for (index_t y = 0; y < 3; ++y) {
        lz[x][y] = x;
      }
    }
    for (index_t x = 0; x < 2; ++x) {
      for (index_t y = 0; y < 2; ++y) {
        rz[x][y] = y;
      }
    }
    out.push_back({"LZ3", FiniteSemigroup::from_table(lz)});
    out.push_back({"RZ2", FiniteSemigroup::from_table(rz)});
    out.push_back({"Z/4", FiniteSemigroup::from_table(cyclic_table(4))});
    out.push_back({"fiber5", FiniteSemigroup::closure({Transformation{0, 1, 2}, Transformation{0, 0, 0},
                                                        Transformation{1, 1, 1}, Transformation{2, 2, 2},
                                                        Transformation{0, 0, 1}})});
    return out;
  }

  Report verify_kernel_structure(std::vector<Named> const& corpus) {
    Report rep;
    rep.suite = "kernel";
    std::map<std::size_t, std::size_t> by_left_ideals;
    for (auto const& [name, S] : corpus) {
      ++rep.instances;
      auto const  T = S.table();
      std::size_t n = T.size();

      // the kernel is the least principal two-sided ideal
      std::vector<Set> J;
      for (index_t a = 0; a < n; ++a) {
        J.push_back(two_sided_ideal(T, a));
      }
      auto minJ = minimal_sets(J);
      if (!rep.check(minJ.size() == 1, name, "no least two-sided ideal")) {
        continue;
      }
      Set const K = minJ[0];

      std::vector<Set> L;
      for (index_t a = 0; a < n; ++a) {
        L.push_back(left_ideal(T, a));
      }
      auto minL = minimal_sets(L);
      by_left_ideals[minL.size()]++;

      std::set<index_t> un;
      std::size_t       total = 0;
      for (auto const& l : minL) {
        un.insert(l.begin(), l.end());
        total += l.size();
        rep.check(std::any_of(l.begin(), l.end(), [&](index_t x) { return T[x][x] == x; }), name,
                  "minimal left ideal " + set_text(l) + " without idempotent");
      }
      rep.check(sorted(un) == K, name, "kernel is not the union of the minimal left ideals");
      rep.check(total == un.size(), name, "minimal left ideals overlap");

      // K a K = K for a in K
      bool simple = true;
      for (index_t a : K) {
        std::set<index_t> kak;
        for (index_t x : K) {
          for (index_t y : K) {
            kak.insert(T[T[x][a]][y]);
          }
        }
        simple = simple && sorted(kak) == K;
      }
      rep.check(simple, name, "kernel is not simple");

      auto kd = kernel(S);
      rep.check(kd.kernel == K, name, "library kernel differs");
      std::vector<Set> libL = kd.minimal_left_ideals;
      std::sort(libL.begin(), libL.end());
      rep.check(libL == minL, name, "library minimal left ideals differ");

      if (name == "LZ3") {
        rep.check(K.size() == 3 && minL.size() == 1, name, "expected one minimal left ideal");
      } else if (name == "RZ2") {
        rep.check(minL.size() == 2, name, "expected two minimal left ideals");
      } else if (name == "Z/4") {
        rep.check(K.size() == 4, name, "expected the whole group as kernel");
      }
    }
    for (auto [k, v] : by_left_ideals) {
      rep.counts["minimal_left_ideals_" + std::to_string(k)] = v;
    }
    return rep;
  }

  Report verify_union_of_groups(std::vector<Named> const& corpus) {
    Report      rep;
    std::size_t regular = 0;
    rep.suite           = "union";
    for (auto const& [name, S] : corpus) {
      ++rep.instances;
      auto const  T = S.table();
      std::size_t n = T.size();

      bool cr = true;
      for (index_t a = 0; a < n; ++a) {
        bool found = false;
        for (index_t x = 0; x < n && !found; ++x) {
          found = T[T[a][x]][a] == a && T[a][x] == T[x][a];
        }
        cr = cr && found;
      }

      std::map<std::pair<Set, Set>, Set> hmap;
      for (index_t a = 0; a < n; ++a) {
        hmap[{left_ideal(T, a), right_ideal(T, a)}].push_back(a);
      }
      bool groups = true;
      for (auto const& [key, H] : hmap) {
        groups = groups && is_group_naive(T, H);
      }

      bool cyclic = true;
      for (index_t a = 0; a < n; ++a) {
        index_t p     = a;
        bool    found = false;
        for (std::size_t k = 0; k < n && !found; ++k) {
          p     = T[p][a];
          found = p == a;
        }
        cyclic = cyclic && found;
      }

      rep.check(cr == groups && groups == cyclic, name, "criteria disagree");
      auto sr = structure_report(S);
      rep.check(sr.is_completely_regular == cr, name, "library complete regularity differs");
      regular += cr;

      if (name == "fiber5") {
        rep.check(!cr, name, "expected not completely regular");
      } else if (name == "LZ3" || name == "Z/4") {
        rep.check(cr, name, "expected completely regular");
      }
    }
    rep.counts["completely_regular"] = regular;
    return rep;
  }

  Report verify_rees_roundtrip(ReesBounds const& bounds) {
    Report rep;
    rep.suite = "rees";
    std::map<std::size_t, std::size_t> per_group;
    for (auto const& x : rees_instances(bounds)) {
      ++rep.instances;
      ++per_group[x.g];
      std::string const name = shape_text(x.g, x.I, x.L, x.A);
      auto const        Gt   = cyclic_table(x.g);
      auto const        T    = rees_table(Gt, x.A, x.I, x.L);
      auto const        n    = T.size();

      // completely simple: the least two-sided ideal is everything, and
      // there is an idempotent
      std::vector<Set> J;
      for (index_t a = 0; a < n; ++a) {
        J.push_back(two_sided_ideal(T, a));
      }
      auto minJ = minimal_sets(J);
      bool has_idem = false;
      Set  idem;
      for (index_t a = 0; a < n; ++a) {
        if (T[a][a] == a) {
          has_idem = true;
          idem.push_back(a);
        }
      }
      rep.check(minJ.size() == 1 && minJ[0] == everything(n) && has_idem, name,
                "matrix semigroup is not completely simple");

      // idempotents are (i, a_{lambda i}^-1, lambda)
      Set expect;
      for (std::size_t i = 0; i < x.I; ++i) {
        for (std::size_t l = 0; l < x.L; ++l) {
          std::size_t g = (x.g - x.A[l][i]) % x.g;
          expect.push_back(static_cast<index_t>((i * x.g + g) * x.L + l));
        }
      }
      std::sort(expect.begin(), expect.end());
      rep.check(idem == expect, name, "idempotents are not (i, a^-1, lambda)");

      auto S = FiniteSemigroup::from_table(T);
      try {
        auto dec = rees_decompose(S);
        auto Dt  = rees_table(dec.data.group.table(), dec.data.sandwich, dec.data.i_count,
                              dec.data.lambda_count);
        // the library indexes the matrix semigroup the same way
        rep.check(is_isomorphism(Dt, T, dec.to_semigroup), name,
                  "decomposition is not an isomorphism");

        auto norm = rees_normalize(dec.data);
        bool normal = true;
        for (std::size_t l = 0; l < norm.lambda_count; ++l) {
          normal = normal && norm.sandwich[l][0] == norm.identity;
        }
        for (std::size_t i = 0; i < norm.i_count; ++i) {
          normal = normal && norm.sandwich[0][i] == norm.identity;
        }
        rep.check(normal && norm.normalized, name, "normalized matrix has a non-identity in row/column 0");
        auto Nt  = rees_table(norm.group.table(), norm.sandwich, norm.i_count, norm.lambda_count);
        auto iso = find_isomorphism(FiniteSemigroup::from_table(Nt, {}, {}, false), S);
        rep.check(iso && is_isomorphism(Nt, T, *iso), name, "normalization changed the isomorphism class");
      } catch (std::exception const& e) {
        rep.fail(name, std::string("exception: ") + e.what());
      }
    }
    for (auto [g, c] : per_group) {
      rep.counts["group_order_" + std::to_string(g)] = c;
    }
    return rep;
  }

  Report verify_left_simple_dichotomy(ReesBounds const& bounds, std::size_t max_size) {
    Report      rep;
    std::size_t covers = 0, branch_one = 0, branch_two = 0;
    rep.suite = "dichotomy";
    for (auto const& x : rees_instances(bounds)) {
      std::size_t const n = x.g * x.I * x.L;
      if (n > max_size) {
        continue;
      }
      ++rep.instances;
      std::string const name = shape_text(x.g, x.I, x.L, x.A);
      auto const        T    = rees_table(cyclic_table(x.g), x.A, x.I, x.L);
      auto const        S    = FiniteSemigroup::from_table(T);

      std::vector<std::uint32_t> ls;  // left simple subsemigroups as bit masks
      for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Set U;
        for (index_t i = 0; i < n; ++i) {
          if (mask >> i & 1u) {
            U.push_back(i);
          }
        }
        if (closed_naive(T, U) && left_simple_naive(T, U)) {
          ls.push_back(mask);
        }
      }
      auto const full        = (1u << n) - 1;
      bool const left_simple = left_simple_naive(T, everything(n));
      std::vector<Set> L;
      for (index_t a = 0; a < n; ++a) {
        L.push_back(left_ideal(T, a));
      }
      auto minL = minimal_sets(L);

      auto to_set = [n](std::uint32_t m) {
        Set U;
        for (index_t i = 0; i < n; ++i) {
          if (m >> i & 1u) {
            U.push_back(i);
          }
        }
        return U;
      };
      for (std::size_t a = 0; a < ls.size(); ++a) {
        for (std::size_t b = a; b < ls.size(); ++b) {
          if ((ls[a] | ls[b]) != full) {
            continue;
          }
          ++covers;
          Set const S1 = to_set(ls[a]), S2 = to_set(ls[b]);
          std::vector<Set> pair{S1, S2};
          std::sort(pair.begin(), pair.end());
          bool const one = left_simple;
          bool const two = (ls[a] & ls[b]) == 0 && pair == minL;
          std::string const inst = name + " S1=" + set_text(S1) + " S2=" + set_text(S2);
          if (!rep.check(one != two, inst, "not exactly one alternative holds")) {
            continue;
          }
          branch_one += one;
          branch_two += two;
          try {
            auto d = left_simple_dichotomy(S, S1, S2);
            rep.check((d == Dichotomy::left_simple) == one, inst, "library reports the other alternative");
          } catch (std::exception const& e) {
            rep.fail(inst, std::string("exception: ") + e.what());
          }
        }
      }
    }
    rep.counts["covering_pairs"]          = covers;
    rep.counts["left_simple"]             = branch_one;
    rep.counts["two_minimal_left_ideals"] = branch_two;
    return rep;
  }

}  // namespace ellis::oracle
