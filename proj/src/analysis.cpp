#include "ellis/analysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ellis/constructions.hpp"
#include "ellis/error.hpp"
#include "ellis/io.hpp"

namespace ellis {

  namespace {

    std::size_t seed_index(std::vector<letter_t> const& seeds, letter_t s) {
      auto it = std::find(seeds.begin(), seeds.end(), s);
      if (it == seeds.end()) {
        throw std::invalid_argument("letter is not a seed");
      }
      return static_cast<std::size_t>(it - seeds.begin());
    }

    bool contains(std::vector<index_t> const& v, index_t x) {
      return std::find(v.begin(), v.end(), x) != v.end();
    }

    // l^k, or nullopt past 2^62
    std::optional<std::uint64_t> power(std::uint64_t l, unsigned k) {
      std::uint64_t r = 1;
      for (unsigned i = 0; i < k; ++i) {
        if (r > (std::uint64_t{1} << 62) / l) {
          return std::nullopt;
        }
        r *= l;
      }
      return r;
    }

    std::vector<index_t> kernel_of_part(FiniteSemigroup const& S, std::vector<index_t> const& part) {
      if (part.empty()) {
        return {};
      }
      auto sub = S.restrict_to(part);
      auto kd  = kernel(sub);
      std::vector<index_t> out;
      for (index_t k : kd.kernel) {
        out.push_back(part[k]);
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    std::string join_labels(FiniteSemigroup const& S, std::vector<index_t> const& v) {
      std::string out = "{";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + S.label(v[i]);
      }
      return out + "}";
    }

    // Transitivity of a symmetric relation given on unordered pairs.
    bool transitive(std::size_t n, std::vector<std::vector<bool>> const& rel) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (rel[i][j] && rel[j][k] && !rel[i][k]) {
              return false;
            }
          }
        }
      }
      return true;
    }

  }  // namespace

  Transformation FiberSemigroup::fiber_map(Word const& tuple) const {
    if (tuple.size() != seeds.size()) {
      throw std::invalid_argument("tuple length differs from the number of seeds");
    }
    std::vector<point_t> img(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      letter_t const a  = column_one_power[tuple[i]];
      auto           it = std::find(seeds.begin(), seeds.end(), a);
      if (it == seeds.end()) {
        throw ConsistencyError("limit letter of a column is not a seed");
      }
      img[i] = static_cast<point_t>(it - seeds.begin());
    }
    return Transformation(std::move(img));
  }

  std::optional<index_t> FiberSemigroup::find(Word const& tuple) const {
    return base.find(fiber_map(tuple));
  }

  std::vector<std::string> fiber_labels(Substitution const& theta, FiberSemigroup const& F) {
    // non-identity permutations are "swap" / "perm_k", the rest "phi" / "phi_k"
    auto is_perm = [](Transformation const& f) { return f.rank() == f.degree(); };
    std::size_t perms = 0, others = 0;
    for (auto const& f : F.base.elements()) {
      if (!f.is_identity() && !f.is_constant()) {
        ++(is_perm(f) ? perms : others);
      }
    }
    std::vector<std::string> out;
    std::size_t              kp = 0, ko = 0;
    for (auto const& f : F.base.elements()) {
      if (f.is_identity()) {
        out.push_back("id");
      } else if (f.is_constant()) {
        out.push_back("Pi_" + theta.symbol(F.seeds[f[0]]));
      } else if (is_perm(f)) {
        out.push_back(perms == 1 ? "swap" : "perm_" + std::to_string(++kp));
      } else {
        out.push_back(others == 1 ? "phi" : "phi_" + std::to_string(++ko));
      }
    }
    return out;
  }

  FiberSemigroup build_fiber_semigroup(Substitution const& theta) {
    FiberSemigroup F;
    F.seeds = fixed_point_seeds(theta);
    if (F.seeds.empty()) {
      throw AnalysisDeclined("no letter s has rule(s)[1] = s, so shift o theta has no fixed points");
    }
    auto const& c1 = theta.column(1);
    auto        e  = c1.idempotent_power();
    if (compose(c1, e) != e) {
      throw AnalysisDeclined("column 1 permutes its periodic letters non-trivially; the limit "
                             "maps of the fiber would depend on the power of theta taken");
    }
    F.column_one_power = e;

    F.columns_all      = occurring_columns(theta, F.seeds, Side::all);
    F.columns_positive = occurring_columns(theta, F.seeds, Side::positive);
    F.columns_negative = occurring_columns(theta, F.seeds, Side::negative);

    std::vector<Transformation> gens;
    auto add = [&gens](Transformation f) {
      if (std::find(gens.begin(), gens.end(), f) == gens.end()) {
        gens.push_back(std::move(f));
      }
    };
    add(Transformation::identity(F.seeds.size()));
    for (auto const& c : F.columns_all) {
      add(F.fiber_map(c.tuple));
    }
    F.base          = FiniteSemigroup::closure(gens);
    F.closure_added = F.base.size() - gens.size();

    auto shadow = [&F](std::vector<ColumnMap> const& cols) {
      std::vector<index_t> g;
      for (auto const& c : cols) {
        auto i = F.find(c.tuple);
        if (!i) {
          throw ConsistencyError("recurrent column missing from the fiber semigroup");
        }
        g.push_back(*i);
      }
      return g.empty() ? g : F.base.generated_by(g);
    };
    F.forward  = shadow(F.columns_positive);
    F.backward = shadow(F.columns_negative);

    F.base.set_labels(fiber_labels(theta, F));
    return F;
  }

  nlohmann::ordered_json cayley_of_fiber(Substitution const& theta) {
    auto F = build_fiber_semigroup(theta);
    auto j = cayley_to_json(F.base);
    auto l = nlohmann::ordered_json::array();
    for (index_t g = 0; g < F.base.size(); ++g) {
      l.push_back(F.base.label(g));
    }
    j["labels"] = std::move(l);
    return j;
  }

  std::pair<FiniteSemigroup, FiniteSemigroup> directional_shadows(FiberSemigroup const& F) {
    auto part = [&F](std::vector<index_t> const& v) {
      if (v.empty()) {
        return FiniteSemigroup{};
      }
      auto S = F.base.restrict_to(v);
      std::vector<std::string> labels;
      for (index_t g : v) {
        labels.push_back(F.base.label(g));
      }
      S.set_labels(labels);
      return S;
    };
    return {part(F.forward), part(F.backward)};
  }

  KernelModel kernel_model(Substitution const&   theta,
                           FiberSemigroup const& F,
                           unsigned              K,
                           std::size_t           max_elements) {
    KernelModel M;
    M.fiber_kernel = kernel(F.base).kernel;
    for (index_t x : M.fiber_kernel) {
      if (!F.base.element(x).is_constant()) {
        throw AnalysisDeclined("the fiber kernel " + join_labels(F.base, M.fiber_kernel)
                               + " contains the non-constant map " + F.base.label(x)
                               + "; it is not a left zero semigroup of constants");
      }
      for (index_t y : M.fiber_kernel) {
        if (F.base.product(x, y) != x) {
          throw AnalysisDeclined("the fiber kernel is not a left zero semigroup");
        }
      }
    }
    M.r     = M.fiber_kernel.size();
    M.base  = static_cast<unsigned>(theta.length());
    M.depth = K;
    for (unsigned k = 0; k <= K; ++k) {
      auto n = power(M.base, k);
      if (!n || M.r * *n > max_elements) {
        break;
      }
      M.explicit_depth = k;
    }
    std::size_t const n = *power(M.base, M.explicit_depth);

    auto lz = left_zero(M.r);
    std::vector<std::string> names;
    for (index_t x : M.fiber_kernel) {
      names.push_back(F.base.label(x));
    }
    lz.set_labels(names);
    auto cyc  = cyclic_group(n);
    M.product = direct_product(lz, cyc);
    M.report  = structure_report(M.product);
    M.rees    = rees_decompose(M.product);
    M.group_cyclic = M.rees.data.group.size() == n
                     && find_isomorphism(M.rees.data.group, cyc).has_value();
    if (!M.report.is_completely_simple || M.rees.data.i_count != M.r
        || M.rees.data.lambda_count != 1 || !M.group_cyclic) {
      throw ConsistencyError("LZ_r x Z/n does not decompose as M[Z/n; r, 1]");
    }
    return M;
  }

  bool ClassificationReport::consistent() const {
    return std::all_of(checks.begin(), checks.end(), [](CrossCheck const& c) { return c.passed; });
  }

  std::optional<WitnessMap> li_yorke_witness_map(Substitution const&   theta,
                                                 FiberSemigroup const& F,
                                                 letter_t              s,
                                                 letter_t              t,
                                                 Direction             dir) {
    WitnessOptions none;
    none.count = 0;
    if (classify_pair(theta, s, t, dir, none).verdict != Verdict::li_yorke) {
      throw std::invalid_argument(theta.symbol(s) + "," + theta.symbol(t) + " is not a "
                                  + to_string(dir) + " Li-Yorke pair");
    }
    auto const  is = seed_index(F.seeds, s);
    auto const  it = seed_index(F.seeds, t);
    auto const& shadow = dir == Direction::forward ? F.forward : F.backward;
    for (index_t g : shadow) {
      auto const& f  = F.base.element(g);
      auto const  fs = F.seeds[f[is]];
      auto const  ft = F.seeds[f[it]];
      if (fs == ft || !classify_pair(theta, fs, ft, dir, none).asymptotic) {
        continue;
      }
      // (fs, ft) is collapsed by every map of the shadow, f among them
      if (f.is_bijective_on_image()) {
        throw ConsistencyError("witness map " + F.base.label(g) + " is injective on its image");
      }
      if (is_completely_regular_element(F.base, g).completely_regular) {
        throw ConsistencyError("witness map " + F.base.label(g) + " is completely regular");
      }
      return WitnessMap{g, s, t, fs, ft, dir};
    }
    return std::nullopt;
  }

  ClassificationReport classify_system(Substitution const&   theta,
                                       FiberSemigroup const& F,
                                       WitnessOptions const& opts) {
    ClassificationReport C;
    C.minimality_guaranteed = theta.is_primitive();
    auto const& seeds = F.seeds;
    auto const  r     = seeds.size();
    auto const& S     = F.base;

    std::vector<std::vector<bool>> prox2(r, std::vector<bool>(r, false));
    for (std::size_t i = 0; i < r; ++i) {
      prox2[i][i] = true;
    }
    for (auto* D : {&C.forward, &C.backward}) {
      D->direction = D == &C.forward ? Direction::forward : Direction::backward;
      std::vector<std::vector<bool>> prox(r, std::vector<bool>(r, false));
      for (std::size_t i = 0; i < r; ++i) {
        prox[i][i] = true;
        for (std::size_t j = i + 1; j < r; ++j) {
          auto p = classify_pair(theta, seeds[i], seeds[j], D->direction, opts);
          if (p.proximal && !p.asymptotic) {
            D->almost_distal = false;
            D->has_li_yorke  = true;
          }
          prox[i][j] = prox[j][i] = p.proximal;
          if (p.proximal) {
            prox2[i][j] = prox2[j][i] = true;
          }
          D->pairs.push_back(std::move(p));
        }
      }
      D->proximality_transitive = transitive(r, prox);
      D->shadow_kernel = kernel_of_part(S, D->direction == Direction::forward ? F.forward : F.backward);
    }
    C.proximality_transitive = transitive(r, prox2);

    auto rep                    = structure_report(S);
    C.fiber_completely_regular  = rep.is_completely_regular;
    C.fiber_nearly_simple       = rep.is_nearly_simple;
    C.fiber_minimal_left_ideals = rep.minimal_left_ideals.size();
    C.non_regular               = rep.non_regular;
    C.directional_kernels_equal = C.forward.shadow_kernel == C.backward.shadow_kernel;

    std::vector<std::pair<letter_t, letter_t>> unexplained;
    for (auto const* D : {&C.forward, &C.backward}) {
      for (auto const& p : D->pairs) {
        if (p.verdict != Verdict::li_yorke) {
          continue;
        }
        if (auto w = li_yorke_witness_map(theta, F, p.s, p.t, D->direction)) {
          C.witness_maps.push_back(*w);
        } else {
          unexplained.emplace_back(p.s, p.t);
        }
      }
    }
    if (!C.witness_maps.empty()) {
      C.witness = C.witness_maps.front().element;
    } else if (!C.non_regular.empty()) {
      C.witness = C.non_regular.front();
    }

    if (!C.minimality_guaranteed) {
      return C;
    }
    bool const almost_distal       = C.forward.almost_distal && C.backward.almost_distal;
    C.predicted_almost_distal      = almost_distal;
    C.predicted_nearly_simple      = almost_distal;
    C.predicted_completely_regular = almost_distal;
    if (C.forward.proximality_transitive && C.backward.proximality_transitive) {
      C.predicted_minimal_left_ideals = C.proximality_transitive ? 1 : 2;
    }

    auto pair_name = [&](letter_t a, letter_t b) {
      return "(" + theta.symbol(a) + "," + theta.symbol(b) + ")";
    };

    // proximal <=> collapsed by some map, on both sides and per direction
    {
      CrossCheck c{"proximal pairs are exactly the collapsed pairs", true, ""};
      auto collapses = [&](std::vector<index_t> const& part, std::size_t i, std::size_t j) {
        return std::any_of(part.begin(), part.end(), [&](index_t g) {
          return S.element(g)[static_cast<point_t>(i)] == S.element(g)[static_cast<point_t>(j)];
        });
      };
      std::vector<index_t> all(S.size());
      for (index_t g = 0; g < S.size(); ++g) {
        all[g] = g;
      }
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
          if (prox2[i][j] != collapses(all, i, j)) {
            c.passed = false;
            c.detail += pair_name(seeds[i], seeds[j]) + " ";
          }
        }
      }
      for (auto const* D : {&C.forward, &C.backward}) {
        auto const& part = D->direction == Direction::forward ? F.forward : F.backward;
        for (auto const& p : D->pairs) {
          auto i = seed_index(seeds, p.s), j = seed_index(seeds, p.t);
          if (p.proximal != collapses(part, i, j)) {
            c.passed = false;
            c.detail += std::string(to_string(D->direction)) + pair_name(p.s, p.t) + " ";
          }
        }
      }
      C.checks.push_back(std::move(c));
    }
    {
      CrossCheck c{"asymptotic pairs are collapsed by the whole directional shadow", true, ""};
      for (auto const* D : {&C.forward, &C.backward}) {
        auto const& part = D->direction == Direction::forward ? F.forward : F.backward;
        for (auto const& p : D->pairs) {
          if (!p.asymptotic) {
            continue;
          }
          auto i = static_cast<point_t>(seed_index(seeds, p.s));
          auto j = static_cast<point_t>(seed_index(seeds, p.t));
          for (index_t g : part) {
            if (S.element(g)[i] != S.element(g)[j]) {
              c.passed = false;
              c.detail += S.label(g) + " separates " + to_string(D->direction)
                          + pair_name(p.s, p.t) + " ";
            }
          }
        }
      }
      C.checks.push_back(std::move(c));
    }
    {
      std::set<index_t> u(C.forward.shadow_kernel.begin(), C.forward.shadow_kernel.end());
      u.insert(C.backward.shadow_kernel.begin(), C.backward.shadow_kernel.end());
      auto k = kernel(S).kernel;
      bool ok = std::vector<index_t>(u.begin(), u.end()) == k;
      C.checks.push_back({"kernel is the union of the directional kernels", ok,
                          ok ? "" : "kernel " + join_labels(S, k) + ", forward "
                                        + join_labels(S, C.forward.shadow_kernel) + ", backward "
                                        + join_labels(S, C.backward.shadow_kernel)});
    }
    if (almost_distal) {
      bool ok = C.fiber_nearly_simple.value_or(false);
      C.checks.push_back({"almost distal system has a nearly simple fiber semigroup", ok,
                          ok ? "" : "non-unit elements outside the kernel"});
    }
    {
      bool const ly = C.forward.has_li_yorke || C.backward.has_li_yorke;
      bool ok = ly == !C.fiber_completely_regular;
      std::string d;
      if (!ok) {
        d = ly ? "Li-Yorke pair present but every fiber map is completely regular"
               : "no Li-Yorke pair but " + join_labels(S, C.non_regular)
                     + " fail complete regularity";
      }
      C.checks.push_back({"Li-Yorke pair present iff some fiber map is not completely regular",
                          ok, d});
    }
    {
      std::string d;
      for (auto [a, b] : unexplained) {
        d += pair_name(a, b) + " ";
      }
      C.checks.push_back({"every Li-Yorke pair has a witness map in its directional shadow",
                          unexplained.empty(),
                          unexplained.empty() ? "" : "no witness for " + d});
    }
    if (C.predicted_minimal_left_ideals == std::size_t{1}) {
      C.checks.push_back({"transitive proximality gives equal directional kernels",
                          C.directional_kernels_equal,
                          C.directional_kernels_equal
                              ? ""
                              : "forward " + join_labels(S, C.forward.shadow_kernel) + " vs backward "
                                    + join_labels(S, C.backward.shadow_kernel)});
    }
    return C;
  }

  namespace {

    // Number of legal words of length n (exact for primitive substitutions:
    // every legal word lies inside theta^k(ab) for a legal two-word ab once
    // l^k >= n).
    std::size_t complexity(Substitution const& theta, std::size_t n) {
      std::set<Word> words;
      unsigned       k = 0;
      for (std::size_t span = 1; span < n; span *= theta.length()) {
        ++k;
      }
      for (auto [a, b] : theta.legal_two_words()) {
        Word w{a, b};
        for (unsigned i = 0; i < k; ++i) {
          w = theta.apply(w);
        }
        for (std::size_t i = 0; i + n <= w.size(); ++i) {
          words.emplace(w.begin() + static_cast<std::ptrdiff_t>(i),
                        w.begin() + static_cast<std::ptrdiff_t>(i + n));
        }
      }
      return words.size();
    }

    bool is_periodic(Substitution const& theta) {
      for (std::size_t n = 1; n <= 32; ++n) {
        if (complexity(theta, n) <= n) {
          return true;
        }
      }
      return false;
    }

    std::string power_text(std::size_t mult, unsigned l, unsigned K) {
      return std::to_string(mult) + " x " + std::to_string(l) + "^" + std::to_string(K);
    }

  }  // namespace

  FullModel full_model_report(Substitution const&               theta,
                              FiberSemigroup const&             F,
                              ClassificationReport const&       C,
                              std::optional<KernelModel> const& M,
                              unsigned                          K) {
    (void) C;
    FullModel   out;
    auto const& S = F.base;
    auto        l = static_cast<unsigned>(theta.length());
    out.periodic  = is_periodic(theta);
    if (out.periodic) {
      out.assumptions.push_back("the subshift is a single periodic orbit; E is the finite cyclic "
                                "group of shift powers");
    } else {
      out.assumptions.push_back(
          "the factor map to the odometer is one-to-one off the orbit of the fiber containing the "
          "fixed points of shift o theta (cited, not derived)");
      out.assumptions.push_back(
          "only the fiber containing the fixed points of shift o theta is computed");
    }
    if (S.size() == 1) {
      // nothing but the identity on the fiber: E is the acting group
      out.strata.push_back({"units", "shift powers sigma^n (symbolic); E is the acting group",
                            {"id"}, std::nullopt, true});
      return out;
    }

    auto rep = structure_report(S);
    out.strata.push_back({"units", "shift powers sigma^n, n in Z (symbolic)", {}, std::nullopt, true});

    std::vector<index_t> middle;
    for (index_t g = 0; g < S.size(); ++g) {
      if (!contains(rep.units, g) && !contains(rep.kernel, g)) {
        middle.push_back(g);
      }
    }
    if (!middle.empty()) {
      Stratum st{"middle",
                 "non-unit elements outside the kernel, keyed by (fiber map, offset mod l^K)",
                 {},
                 power_text(middle.size(), l, K),
                 false};
      for (index_t g : middle) {
        st.fiber_maps.push_back(S.label(g));
      }
      bool in_kernel = true;
      for (index_t f : middle) {
        for (index_t g : middle) {
          in_kernel = in_kernel && contains(rep.kernel, S.product(f, g));
        }
      }
      out.middle_products_in_kernel = in_kernel;
      out.strata.push_back(std::move(st));
      out.assumptions.push_back(
          "the middle stratum is identified with (fiber map) x Z from the fiber algebra; not proven");
    }

    Stratum kst{"kernel", "", {}, std::nullopt, false};
    for (index_t g : rep.kernel) {
      kst.fiber_maps.push_back(S.label(g));
    }
    if (M) {
      kst.description = "LZ_" + std::to_string(M->r) + " x Z/" + std::to_string(l) + "^"
                        + std::to_string(K) + " (explicit table at depth "
                        + std::to_string(M->explicit_depth) + ")";
      kst.count = power_text(M->r, l, K);
    } else {
      kst.description = "kernel shadow " + join_labels(S, rep.kernel)
                        + "; product structure with the odometer not modelled";
    }
    out.strata.push_back(std::move(kst));
    return out;
  }

  Analysis analyze(Substitution const& theta, AnalysisOptions const& opts) {
    Analysis a{theta, {}, {}, {}, {}, std::nullopt, "", {}, opts};
    a.fiber  = build_fiber_semigroup(a.theta);
    a.seeds  = a.fiber.seeds;
    a.labels = fiber_labels(a.theta, a.fiber);
    WitnessOptions w;
    w.count   = opts.witnesses;
    w.horizon = opts.window;
    a.classification = classify_system(a.theta, a.fiber, w);
    try {
      a.kernel = kernel_model(a.theta, a.fiber, opts.depth, opts.kernel_elements);
    } catch (AnalysisDeclined const& e) {
      a.kernel_declined = e.what();
    }
    a.model = full_model_report(a.theta, a.fiber, a.classification, a.kernel, opts.depth);
    return a;
  }

  // ----------------------------------------------------------------------
  // reports

  namespace {

    using ojson = nlohmann::ordered_json;

    std::string map_text(Analysis const& a, Transformation const& f) {
      std::string out = "(";
      for (point_t i = 0; i < f.degree(); ++i) {
        out += (i ? ", " : "") + a.theta.symbol(a.seeds[i]) + "->" + a.theta.symbol(a.seeds[f[i]]);
      }
      return out + ")";
    }

    std::string image_text(Analysis const& a, Transformation const& f) {
      std::string out = "{";
      bool        first = true;
      for (point_t p : f.image_set()) {
        out += (first ? "" : ",") + a.theta.symbol(a.seeds[p]);
        first = false;
      }
      return out + "}";
    }

    ojson labels_json(FiniteSemigroup const& S, std::vector<index_t> const& v) {
      ojson j = ojson::array();
      for (index_t x : v) {
        j.push_back(S.label(x));
      }
      return j;
    }

    ojson columns_json(Analysis const& a, std::vector<ColumnMap> const& cols) {
      ojson j = ojson::array();
      for (auto const& c : cols) {
        ojson e;
        e["tuple"] = a.theta.format(c.tuple);
        e["map"]   = a.fiber.base.label(*a.fiber.find(c.tuple));
        if (c.position) {
          e["position"] = *c.position;
        } else {
          e["position"] = nullptr;
        }
        j.push_back(std::move(e));
      }
      return j;
    }

    ojson pair_json(Analysis const& a, PairClassification const& p) {
      ojson j;
      j["pair"]       = {a.theta.symbol(p.s), a.theta.symbol(p.t)};
      j["direction"]  = to_string(p.direction);
      j["verdict"]    = to_string(p.verdict);
      j["proximal"]   = p.proximal;
      j["asymptotic"] = p.asymptotic;
      if (p.threshold) {
        j["threshold"] = *p.threshold;
      }
      ojson w = ojson::array();
      for (auto const& x : p.witnesses) {
        w.push_back({{"n", x.n}, {"N", x.N}});
      }
      j["witnesses"] = std::move(w);
      ojson rp       = ojson::array();
      for (auto [s, t] : p.recurrent_pairs) {
        rp.push_back(a.theta.format({s, t}));
      }
      j["recurrent_pairs"] = std::move(rp);
      return j;
    }

    template <typename T>
    ojson opt_json(std::optional<T> const& v) {
      return v ? ojson(*v) : ojson(nullptr);
    }

  }  // namespace

  nlohmann::ordered_json to_json(Analysis const& a) {
    auto const& S = a.fiber.base;
    auto const& C = a.classification;
    ojson       j;
    j["substitution"] = a.theta.to_json();
    ojson seeds       = ojson::array();
    for (letter_t s : a.seeds) {
      seeds.push_back(a.theta.symbol(s));
    }
    j["seeds"] = std::move(seeds);

    ojson pairs = ojson::array();
    for (auto const* D : {&C.forward, &C.backward}) {
      for (auto const& p : D->pairs) {
        pairs.push_back(pair_json(a, p));
      }
    }
    j["pairs"] = std::move(pairs);

    auto  rep = structure_report(S);
    ojson fs;
    ojson elems = ojson::array();
    for (index_t g = 0; g < S.size(); ++g) {
      elems.push_back({{"label", S.label(g)}, {"map", map_text(a, S.element(g))}});
    }
    fs["elements"] = std::move(elems);
    ojson cayley   = ojson::array();
    for (index_t x = 0; x < S.size(); ++x) {
      ojson row = ojson::array();
      for (index_t y = 0; y < S.size(); ++y) {
        row.push_back(S.label(S.product(x, y)));
      }
      cayley.push_back(std::move(row));
    }
    fs["cayley"]        = std::move(cayley);
    fs["idempotents"]   = labels_json(S, rep.idempotents);
    fs["kernel"]        = labels_json(S, rep.kernel);
    fs["units"]         = labels_json(S, rep.units);
    fs["minimal_left_ideals"] = rep.minimal_left_ideals.size();
    fs["completely_regular"]  = rep.is_completely_regular;
    fs["nearly_simple"]       = opt_json(rep.is_nearly_simple);
    fs["non_regular"]         = labels_json(S, rep.non_regular);
    fs["closure_added"]       = a.fiber.closure_added;
    fs["forward_shadow"]      = labels_json(S, a.fiber.forward);
    fs["backward_shadow"]     = labels_json(S, a.fiber.backward);
    fs["columns"] = {{"all", columns_json(a, a.fiber.columns_all)},
                     {"positive", columns_json(a, a.fiber.columns_positive)},
                     {"negative", columns_json(a, a.fiber.columns_negative)}};
    j["fiber_semigroup"] = std::move(fs);

    ojson c;
    c["minimality_guaranteed"] = C.minimality_guaranteed;
    for (auto const* D : {&C.forward, &C.backward}) {
      c[std::string(to_string(D->direction))] = {
          {"almost_distal", D->almost_distal},
          {"li_yorke_pairs", D->has_li_yorke},
          {"proximality_transitive_on_computed_pairs", D->proximality_transitive},
          {"shadow_kernel", labels_json(S, D->shadow_kernel)}};
    }
    c["proximality_transitive_on_computed_pairs"] = C.proximality_transitive;
    c["predicted"] = {{"almost_distal", opt_json(C.predicted_almost_distal)},
                      {"nearly_simple", opt_json(C.predicted_nearly_simple)},
                      {"completely_regular", opt_json(C.predicted_completely_regular)},
                      {"minimal_left_ideals", opt_json(C.predicted_minimal_left_ideals)}};
    c["computed"] = {{"completely_regular", C.fiber_completely_regular},
                     {"nearly_simple", opt_json(C.fiber_nearly_simple)},
                     {"minimal_left_ideals", C.fiber_minimal_left_ideals},
                     {"directional_kernels_equal", C.directional_kernels_equal}};
    c["witness"] = C.witness ? ojson(S.label(*C.witness)) : ojson(nullptr);
    ojson wm     = ojson::array();
    for (auto const& w : C.witness_maps) {
      wm.push_back({{"pair", {a.theta.symbol(w.s), a.theta.symbol(w.t)}},
                    {"direction", to_string(w.direction)},
                    {"map", S.label(w.element)},
                    {"images", {a.theta.symbol(w.image_s), a.theta.symbol(w.image_t)}},
                    {"image", image_text(a, S.element(w.element))},
                    {"image_of_square",
                     image_text(a, compose(S.element(w.element), S.element(w.element)))}});
    }
    c["witness_maps"] = std::move(wm);
    ojson checks      = ojson::array();
    for (auto const& x : C.checks) {
      checks.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    }
    c["checks"]       = std::move(checks);
    c["consistent"]   = C.consistent();
    j["classification"] = std::move(c);

    ojson km;
    if (a.kernel) {
      auto const& M = *a.kernel;
      km["fiber_kernel"]   = labels_json(S, M.fiber_kernel);
      km["r"]              = M.r;
      km["base"]           = M.base;
      km["depth"]          = M.depth;
      km["explicit_depth"] = M.explicit_depth;
      km["elements"]       = M.product.size();
      km["completely_simple"] = M.report.is_completely_simple;
      km["rees"] = {{"I", M.rees.data.i_count},
                    {"Lambda", M.rees.data.lambda_count},
                    {"group_order", M.rees.data.group.size()},
                    {"group_cyclic", M.group_cyclic}};
    } else {
      km["declined"] = a.kernel_declined;
    }
    j["kernel_model"] = std::move(km);

    ojson st;
    st["periodic"] = a.model.periodic;
    ojson list     = ojson::array();
    for (auto const& s : a.model.strata) {
      ojson e{{"name", s.name}, {"description", s.description}, {"symbolic", s.symbolic}};
      e["fiber_maps"] = s.fiber_maps;
      e["count"]      = opt_json(s.count);
      list.push_back(std::move(e));
    }
    st["strata"] = std::move(list);
    st["middle_products_in_kernel"] = opt_json(a.model.middle_products_in_kernel);
    st["assumptions"]               = a.model.assumptions;
    j["strata"]                     = std::move(st);
    return j;
  }

  std::string text_summary(Analysis const& a) {
    auto const&        S = a.fiber.base;
    auto const&        C = a.classification;
    std::ostringstream out;
    auto const&        th = a.theta;
    out << "substitution: " << th.size() << " letters, length " << th.length()
        << (th.is_primitive() ? ", primitive" : ", not primitive (minimality not guaranteed)")
        << "\n";
    for (letter_t x = 0; x < th.size(); ++x) {
      out << "  " << th.symbol(x) << " -> " << th.format(th.rule(x)) << "\n";
    }
    out << "fixed points of shift o theta:\n";
    for (letter_t s : a.seeds) {
      FixedPoint x(th, s);
      out << "  x_" << th.symbol(s) << "  " << x.window_text(1) << "   " << x.window_text(2)
          << "\n";
    }

    out << "\npairs:\n";
    for (auto const* D : {&C.forward, &C.backward}) {
      for (auto const& p : D->pairs) {
        out << "  " << (D->direction == Direction::forward ? "forward " : "backward") << " ("
            << th.symbol(p.s) << "," << th.symbol(p.t) << ") " << to_string(p.verdict);
        if (p.asymptotic && p.threshold) {
          out << ", equal from |n| >= " << *p.threshold;
        }
        if (!p.witnesses.empty()) {
          out << ", witnesses (n,N):";
          for (auto const& w : p.witnesses) {
            out << " (" << w.n << "," << w.N << ")";
          }
        }
        out << "\n";
      }
    }

    out << "\nfiber semigroup (" << S.size() << " elements):\n";
    for (index_t g = 0; g < S.size(); ++g) {
      out << "  " << S.label(g) << " = " << map_text(a, S.element(g)) << "\n";
    }
    out << "  products (row x column):\n";
    std::size_t w = 4;
    for (index_t g = 0; g < S.size(); ++g) {
      w = std::max(w, S.label(g).size() + 1);
    }
    auto pad = [w](std::string s) {
      s.resize(std::max(w, s.size()), ' ');
      return s;
    };
    out << "    " << pad("");
    for (index_t y = 0; y < S.size(); ++y) {
      out << pad(S.label(y));
    }
    out << "\n";
    for (index_t x = 0; x < S.size(); ++x) {
      out << "    " << pad(S.label(x));
      for (index_t y = 0; y < S.size(); ++y) {
        out << pad(S.label(S.product(x, y)));
      }
      out << "\n";
    }
    auto rep = structure_report(S);
    out << "  idempotents: " << join_labels(S, rep.idempotents) << "\n";
    out << "  kernel: " << join_labels(S, rep.kernel) << ", " << rep.minimal_left_ideals.size()
        << " minimal left ideal(s)\n";
    out << "  forward shadow: " << join_labels(S, a.fiber.forward)
        << "\n  backward shadow: " << join_labels(S, a.fiber.backward) << "\n";
    for (index_t g : rep.non_regular) {
      auto const& f = S.element(g);
      out << "  " << S.label(g) << " is not completely regular: image of its square "
          << image_text(a, compose(f, f)) << " is strictly inside its image " << image_text(a, f)
          << "\n";
    }

    out << "\nclassification:\n";
    auto ad = [](bool b) { return b ? "almost distal" : "not almost distal"; };
    out << "  forward " << ad(C.forward.almost_distal) << ", backward " << ad(C.backward.almost_distal)
        << "\n";
    out << "  proximality " << (C.proximality_transitive ? "transitive" : "not transitive")
        << " on computed pairs; directional kernels "
        << (C.directional_kernels_equal ? "equal" : "differ") << "\n";
    if (!C.minimality_guaranteed) {
      out << "  minimality not guaranteed; no predictions\n";
    } else {
      if (*C.predicted_almost_distal) {
        out << "  verdict: almost distal; nearly simple predicted";
      } else {
        out << "  verdict: not completely regular";
        if (C.witness) {
          out << "; witness " << S.label(*C.witness);
        }
      }
      out << "\n";
      if (C.predicted_minimal_left_ideals) {
        out << "  minimal left ideals predicted: " << *C.predicted_minimal_left_ideals << "\n";
      }
    }
    for (auto const& wm : C.witness_maps) {
      out << "  " << to_string(wm.direction) << " (" << th.symbol(wm.s) << "," << th.symbol(wm.t)
          << "): " << S.label(wm.element) << " sends it to the asymptotic pair ("
          << th.symbol(wm.image_s) << "," << th.symbol(wm.image_t) << ")\n";
    }
    for (auto const& c : C.checks) {
      out << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name;
      if (!c.detail.empty()) {
        out << ": " << c.detail;
      }
      out << "\n";
    }

    out << "\nkernel model: ";
    if (a.kernel) {
      auto const& M = *a.kernel;
      out << "LZ_" << M.r << " x Z/" << M.base << "^" << M.depth << "; explicit table at depth "
          << M.explicit_depth << " has " << M.product.size() << " elements, "
          << (M.report.is_completely_simple ? "completely simple" : "NOT completely simple")
          << ", Rees data |I| = " << M.rees.data.i_count << ", |Lambda| = "
          << M.rees.data.lambda_count << ", G = Z/" << M.rees.data.group.size() << "\n";
    } else {
      out << "declined: " << a.kernel_declined << "\n";
    }

    out << "\nstrata:\n";
    for (auto const& s : a.model.strata) {
      out << "  " << s.name << ": " << s.description;
      if (!s.fiber_maps.empty()) {
        out << " [";
        for (std::size_t i = 0; i < s.fiber_maps.size(); ++i) {
          out << (i ? ", " : "") << s.fiber_maps[i];
        }
        out << "]";
      }
      if (s.count) {
        out << ", " << *s.count << " elements";
      }
      out << "\n";
    }
    if (a.model.middle_products_in_kernel) {
      out << "  products within the middle stratum "
          << (*a.model.middle_products_in_kernel ? "land in the kernel" : "leave the kernel")
          << "\n";
    }
    for (auto const& s : a.model.assumptions) {
      out << "  assumption: " << s << "\n";
    }
    return out.str();
  }

  std::string fiber_dot(Analysis const& a) {
    return eggbox_dot(a.fiber.base, "fiber");
  }

  // ----------------------------------------------------------------------
  // the worked three-letter example

  std::vector<GoldenCheck> golden_checks(Substitution const& theta) {
    std::vector<GoldenCheck> out;
    auto add = [&out](std::string name, bool ok, std::string detail = "") {
      out.push_back({std::move(name), ok, std::move(detail)});
    };
    auto guarded = [&add](std::string const& name, auto&& fn) {
      try {
        fn();
      } catch (std::exception const& e) {
        add(name, false, std::string("exception: ") + e.what());
      }
    };

    auto sym = [&theta](std::string const& s) { return theta.letter(s); };
    auto a = sym("a"), b = sym("b"), c = sym("c");
    if (theta.size() != 3 || !a || !b || !c) {
      add("alphabet is {a, b, c}", false, "got " + std::to_string(theta.size()) + " letters");
      return out;
    }

    auto seeds = fixed_point_seeds(theta);
    add("seeds are {a, b, c}", seeds == std::vector<letter_t>{*a, *b, *c});

    struct Row {
      letter_t    s;
      std::string k1, k2;
    };
    std::vector<Row> rows{{*a, "a.acaa", "aacaaa.acaaaccbaaacaaaacaa"},
                          {*b, "a.bcaa", "aacaaa.bcaaaccbaaacaaaacaa"},
                          {*c, "a.ccba", "aacaaa.ccbaaccbaabcaaaacaa"}};
    for (unsigned k : {1u, 2u}) {
      std::string name = "windows after " + std::to_string(k) + " step" + (k > 1 ? "s" : "");
      guarded(name, [&] {
        std::string got, diff;
        bool        ok = true;
        for (auto const& r : rows) {
          auto w    = FixedPoint(theta, r.s).window_text(k);
          auto want = k == 1 ? r.k1 : r.k2;
          if (w != want) {
            ok = false;
            diff += "x_" + theta.symbol(r.s) + ": " + w + " != " + want + "; ";
          }
        }
        add(name, ok, diff);
      });
    }

    std::optional<Analysis> an;
    try {
      AnalysisOptions o;
      o.depth = 2;
      an      = analyze(theta, o);
    } catch (std::exception const& e) {
      add("analysis runs", false, e.what());
      return out;
    }
    auto const& F = an->fiber;
    auto const& S = F.base;
    auto const& C = an->classification;
    // maps on seed indices 0 = a, 1 = b, 2 = c
    Transformation const id{0, 1, 2}, Pa{0, 0, 0}, Pb{1, 1, 1}, Pc{2, 2, 2}, phi{0, 0, 1};
    auto idx = [&S](Transformation const& f) { return S.find(f); };

    {
      bool ok = S.size() == 5;
      for (auto const* f : {&id, &Pa, &Pb, &Pc, &phi}) {
        ok = ok && idx(*f).has_value();
      }
      add("fiber semigroup is {id, Pi_a, Pi_b, Pi_c, phi} with phi = (a->a, b->a, c->b)", ok,
          "got " + std::to_string(S.size()) + " elements");
    }
    if (!idx(phi) || !idx(Pa) || !idx(Pb) || !idx(Pc) || !idx(id)) {
      return out;
    }
    index_t const iid = *idx(id), ia = *idx(Pa), ib = *idx(Pb), ic = *idx(Pc), ip = *idx(phi);

    {
      struct P {
        index_t x, y, z;
        char const* text;
      };
      std::vector<P> rel{{ip, ip, ia, "phi phi = Pi_a"},     {ip, ia, ia, "phi Pi_a = Pi_a"},
                         {ia, ip, ia, "Pi_a phi = Pi_a"},    {ip, ib, ia, "phi Pi_b = Pi_a"},
                         {ip, ic, ib, "phi Pi_c = Pi_b"},    {ib, ip, ib, "Pi_b phi = Pi_b"},
                         {ic, ip, ic, "Pi_c phi = Pi_c"}};
      std::string bad;
      for (auto const& r : rel) {
        if (S.product(r.x, r.y) != r.z) {
          bad += std::string(r.text) + "; ";
        }
      }
      for (index_t x : {ia, ib, ic}) {
        for (index_t y : {ia, ib, ic}) {
          if (S.product(x, y) != x) {
            bad += S.label(x) + " " + S.label(y) + " != " + S.label(x) + "; ";
          }
        }
      }
      add("product relations", bad.empty(), bad);
    }

    auto rep = structure_report(S);
    {
      std::vector<index_t> want{iid, ia, ib, ic};
      std::sort(want.begin(), want.end());
      add("idempotents are {id, Pi_a, Pi_b, Pi_c}", rep.idempotents == want,
          "got " + join_labels(S, rep.idempotents));
    }
    {
      std::vector<index_t> want{ia, ib, ic};
      std::sort(want.begin(), want.end());
      auto poset = idempotent_poset(S);
      bool iso   = find_isomorphism(S.restrict_to(rep.kernel), left_zero(3)).has_value();
      add("minimal idempotents = kernel = {Pi_a, Pi_b, Pi_c}, a left zero semigroup",
          poset.minimal == want && rep.kernel == want && iso,
          "minimal " + join_labels(S, poset.minimal) + ", kernel " + join_labels(S, rep.kernel));
    }
    add("phi is the only element that is not completely regular; im phi^2 = {a} inside im phi = {a, b}",
        rep.non_regular == std::vector<index_t>{ip} && phi.image_set() == std::vector<point_t>{0, 1}
            && compose(phi, phi).image_set() == std::vector<point_t>{0},
        "non regular " + join_labels(S, rep.non_regular));

    auto find_pair = [&](DirectionSummary const& D, letter_t s, letter_t t) -> PairClassification const* {
      for (auto const& p : D.pairs) {
        if ((p.s == s && p.t == t) || (p.s == t && p.t == s)) {
          return &p;
        }
      }
      return nullptr;
    };
    {
      auto p = find_pair(C.forward, *a, *b);
      add("(a,b) forward asymptotic", p && p->verdict == Verdict::asymptotic);
    }
    {
      bool        ok = true;
      std::string d;
      for (auto [s, t] : {std::pair{*a, *c}, std::pair{*b, *c}}) {
        auto p = find_pair(C.forward, s, t);
        if (!p || p->verdict != Verdict::li_yorke || p->witnesses.empty()
            || !check_li_yorke_witnesses(FixedPoint(theta, p->s), FixedPoint(theta, p->t),
                                         Direction::forward, p->witnesses)) {
          ok = false;
          d += "(" + theta.symbol(s) + "," + theta.symbol(t) + ") ";
        }
      }
      add("(a,c) and (b,c) forward Li-Yorke with valid witnesses", ok, d);
    }
    {
      bool ok = C.backward.pairs.size() == 3;
      for (auto const& p : C.backward.pairs) {
        ok = ok && p.verdict == Verdict::asymptotic;
      }
      add("all pairs backward asymptotic", ok);
    }
    add("backward almost distal, not forward almost distal; not completely regular with witness phi",
        C.backward.almost_distal && !C.forward.almost_distal
            && C.predicted_completely_regular == false && !C.fiber_completely_regular
            && C.witness == ip && C.consistent(),
        C.consistent() ? "" : "a cross-check failed");
    add("proximality transitive on computed pairs; directional kernels equal",
        C.proximality_transitive && C.directional_kernels_equal
            && C.predicted_minimal_left_ideals == std::size_t{1});
    {
      bool ok = an->kernel && an->kernel->product.size() == 75
                && an->kernel->report.is_completely_simple && an->kernel->rees.data.i_count == 3
                && an->kernel->rees.data.lambda_count == 1
                && an->kernel->rees.data.group.size() == 25 && an->kernel->group_cyclic;
      add("kernel model at depth 2: 75 elements, completely simple, G = Z/25, |I| = 3, |Lambda| = 1",
          ok, an->kernel ? "" : an->kernel_declined);
    }
    return out;
  }

}  // namespace ellis
