// One [PASS]/[FAIL] line per acceptance criterion. Exit status 1 if any of
// the selected criteria fails.
//
//   acceptance                 all criteria
//   acceptance --criterion 4   just one (repeatable)

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "ellis/analysis.hpp"
#include "ellis/error.hpp"
#include "ellis/oracle.hpp"

namespace fs = std::filesystem;
using namespace ellis;

namespace {

  // pinned parameters
  constexpr std::uint64_t fuzz_seed      = 20240611;
  constexpr std::size_t   fuzz_systems   = 200;  // analysed systems, >= 100 required
  constexpr std::size_t   fuzz_max_tries = 100000;
  constexpr std::size_t   golden_count   = 14;

  struct Run {
    int         status = -1;
    std::string out;
  };

  Run run(std::string const& cmd) {
    Run   r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) {
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) {
      r.out.append(buf.data(), n);
    }
    int st   = pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
  }

  std::string cli() {
    return std::string("'") + ELLIS_CLI + "'";
  }
  fs::path data(char const* name) {
    return fs::path(ELLIS_DATA_DIR) / name;
  }

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  Outcome golden() {
    auto r = run(cli() + " verify-paper-example --format json");
    if (r.status != 0) {
      return {false, "verify-paper-example exited " + std::to_string(r.status)};
    }
    auto j = nlohmann::json::parse(r.out);
    std::size_t passed = j["passed"];
    std::size_t total  = j["assertions"].size();
    if (total != golden_count || passed != golden_count) {
      return {false, std::to_string(passed) + "/" + std::to_string(total) + " assertions"};
    }
    // the same run on a tampered copy must fail
    auto tmp = fs::temp_directory_path() / "ellis_tampered.sub";
    {
      std::ofstream os(tmp);
      os << "alphabet: a b c\nrules:\n  a: a a c a a\n  b: a b c a a\n  c: a c c a a\n";
    }
    auto t = run(cli() + " verify-paper-example --file '" + tmp.string() + "'");
    fs::remove(tmp);
    if (t.status != 2) {
      return {false, "tampered copy exited " + std::to_string(t.status)};
    }
    return {true, std::to_string(passed) + "/" + std::to_string(total)
                      + " assertions; tampered copy exits 2"};
  }

  Outcome bijective() {
    auto th = read_substitution(data("bijective.sub"));
    auto F  = build_fiber_semigroup(th);
    auto const& S = F.base;
    std::set<Transformation> maps(S.elements().begin(), S.elements().end());
    if (maps != std::set<Transformation>{Transformation{0, 1}, Transformation{1, 0}}) {
      return {false, "fiber semigroup is not {id, swap}"};
    }
    auto rep = structure_report(S);
    if (!rep.is_group || !rep.is_completely_regular) {
      return {false, "fiber semigroup is not a completely regular group"};
    }
    auto C = classify_system(th, F);
    if (!C.forward.almost_distal || !C.backward.almost_distal) {
      return {false, "not almost distal in both directions"};
    }
    if (C.predicted_nearly_simple != true || !C.consistent()) {
      return {false, "near simplicity not predicted or a cross-check failed"};
    }
    try {
      (void) kernel_model(th, F, 2);
      return {false, "kernel model did not decline"};
    } catch (AnalysisDeclined const&) {
    }
    auto r = run(cli() + " analyze '" + data("bijective.sub").string() + "'");
    if (r.status != 0 || r.out.find("almost distal; nearly simple predicted") == std::string::npos) {
      return {false, "analyze output lacks the verdict"};
    }
    return {true, "{id, swap} group, almost distal both ways, nearly simple predicted, kernel model declined"};
  }

  Outcome oracles() {
    namespace eo = ellis::oracle;
    auto corpus  = eo::corpus();
    std::vector<eo::Report> reports{eo::verify_cpreg_criterion(4), eo::verify_kernel_structure(corpus),
                                    eo::verify_union_of_groups(corpus), eo::verify_rees_roundtrip(),
                                    eo::verify_left_simple_dichotomy()};
    std::ostringstream d;
    bool               ok = true;
    for (auto const& r : reports) {
      ok = ok && r.passed() && r.instances > 0;
      d << r.suite << " " << r.instances << "/" << r.failures.size() << " ";
    }
    d << "(instances/failures)";
    return {ok, d.str()};
  }

  std::string compact(Substitution const& th) {
    std::string s;
    for (letter_t a = 0; a < th.size(); ++a) {
      s += (a ? " " : "") + th.symbol(a) + "->" + th.format(th.rule(a));
    }
    return s;
  }

  Outcome fuzz() {
    std::mt19937_64 rng(fuzz_seed);
    std::size_t     analysed = 0, declined = 0, tries = 0, li_yorke = 0, counter = 0;
    std::map<std::string, std::size_t> other;
    std::vector<std::string>           examples;
    while (analysed < fuzz_systems && tries < fuzz_max_tries) {
      ++tries;
      std::size_t const n = 1 + rng() % 4, l = 2 + rng() % 3;
      std::vector<std::string> al;
      for (std::size_t i = 0; i < n; ++i) {
        al.push_back(std::string(1, static_cast<char>('a' + i)));
      }
      std::vector<Word> rules(n, Word(l));
      for (auto& r : rules) {
        for (auto& x : r) {
          x = static_cast<letter_t>(rng() % n);
        }
      }
      Substitution th(al, rules);
      if (!th.is_primitive() || fixed_point_seeds(th).empty()) {
        continue;
      }
      try {
        auto F = build_fiber_semigroup(th);
        WitnessOptions w;
        w.count = 0;
        auto C  = classify_system(th, F, w);
        ++analysed;
        bool const ly = C.forward.has_li_yorke || C.backward.has_li_yorke;
        li_yorke += ly;
        if (ly == C.fiber_completely_regular) {
          ++counter;
          if (examples.size() < 3) {
            examples.push_back(compact(th));
          }
        }
        for (auto const& c : C.checks) {
          if (!c.passed && c.name.rfind("Li-Yorke pair present iff", 0) != 0) {
            ++other[c.name];
          }
        }
      } catch (AnalysisDeclined const&) {
        ++declined;
      }
    }
    std::ostringstream d;
    d << analysed << " systems (" << li_yorke << " with Li-Yorke pairs, " << declined
      << " declined), " << counter << " counterexamples";
    for (auto const& e : examples) {
      d << "; e.g. " << e;
    }
    for (auto const& [name, k] : other) {
      d << "; " << k << " failures of: " << name;
    }
    return {analysed >= 100 && counter == 0, d.str()};
  }

  Outcome determinism() {
    for (char const* f : {"paper.sub", "bijective.sub"}) {
      auto cmd = cli() + " analyze '" + data(f).string() + "' --format json";
      auto a   = run(cmd);
      auto b   = run(cmd);
      if (a.status != 0 || b.status != 0) {
        return {false, std::string(f) + ": analyze exited " + std::to_string(a.status)};
      }
      if (a.out != b.out || a.out.empty()) {
        return {false, std::string(f) + ": outputs differ"};
      }
    }
    return {true, "byte-identical JSON for paper.sub and bijective.sub"};
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App         app{"acceptance criteria"};
  std::vector<int> which;
  app.add_option("--criterion", which, "Criterion number (1-5)")->check(CLI::Range(1, 5));
  CLI11_PARSE(app, argc, argv);
  if (which.empty()) {
    which = {1, 2, 3, 4, 5};
  }

  struct Criterion {
    char const* name;
    Outcome (*fn)();
  };
  std::map<int, Criterion> const all{{1, {"golden example", golden}},
                                     {2, {"bijective example", bijective}},
                                     {3, {"oracle suites", oracles}},
                                     {4, {"fuzz: Li-Yorke pair iff non completely regular fiber map", fuzz}},
                                     {5, {"determinism", determinism}}};
  bool ok = true;
  for (int k : which) {
    auto const& c = all.at(k);
    Outcome     o;
    try {
      o = c.fn();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    ok = ok && o.pass;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << k << " " << c.name << ": " << o.detail << std::endl;
  }
  return ok ? 0 : 1;
}
