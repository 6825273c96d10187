// ellis: analyze substitution subshifts, check the worked example, run the
// brute-force oracle.
//
// exit codes: 0 ok, 1 input error, 2 verification failure

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "ellis/analysis.hpp"
#include "ellis/error.hpp"
#include "ellis/oracle.hpp"

#ifndef ELLIS_DATA_DIR
#define ELLIS_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using namespace ellis;

namespace {

  constexpr int exit_ok = 0, exit_input = 1, exit_verify = 2;

  fs::path data_dir() {
    if (char const* env = std::getenv("ELLIS_DATA_DIR")) {
      return env;
    }
    return ELLIS_DATA_DIR;
  }

  struct AnalyzeArgs {
    std::string              path;
    unsigned                 depth     = 8;
    std::int64_t             window    = 0;
    std::size_t              witnesses = 5;
    std::vector<std::string> formats{"text"};
    std::string              out;
  };

  struct Verbosity {
    bool quiet = false, verbose = false;
  };

  int write_outputs(Analysis const& a, AnalyzeArgs const& args, Verbosity v) {
    for (auto const& f : args.formats) {
      std::string body, ext;
      if (f == "text") {
        body = text_summary(a), ext = "txt";
      } else if (f == "json") {
        body = to_json(a).dump(2) + "\n", ext = "json";
      } else {
        body = fiber_dot(a), ext = "dot";
      }
      if (args.out.empty()) {
        std::cout << body;
        continue;
      }
      fs::create_directories(args.out);
      auto path = fs::path(args.out) / (fs::path(args.path).stem().string() + "." + ext);
      std::ofstream os(path, std::ios::binary);
      os << body;
      if (!os) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return exit_input;
      }
      if (!v.quiet) {
        std::cerr << "wrote " << path.string() << "\n";
      }
    }
    return exit_ok;
  }

  int cmd_analyze(AnalyzeArgs const& args, Verbosity v) {
    try {
      auto            theta = read_substitution(args.path);
      AnalysisOptions o;
      o.depth     = args.depth;
      o.window    = args.window;
      o.witnesses = args.witnesses;
      auto a      = analyze(theta, o);
      if (int rc = write_outputs(a, args, v); rc != exit_ok) {
        return rc;
      }
      auto const& C = a.classification;
      if (v.verbose) {
        for (auto const& c : C.checks) {
          std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << "\n";
        }
      }
      if (!C.consistent()) {
        for (auto const& c : C.checks) {
          if (!c.passed) {
            std::cerr << "inconsistent: " << c.name << ": " << c.detail << "\n";
          }
        }
        return exit_verify;
      }
      return exit_ok;
    } catch (ParseError const& e) {
      std::cerr << "error: " << args.path << ": " << e.what() << "\n";
      return exit_input;
    } catch (AnalysisDeclined const& e) {
      std::cerr << "declined: " << e.what() << "\n";
      return exit_input;
    } catch (ConsistencyError const& e) {
      std::cerr << "inconsistent: " << e.what() << "\n";
      return exit_verify;
    } catch (std::invalid_argument const& e) {
      std::cerr << "error: " << args.path << ": " << e.what() << "\n";
      return exit_input;
    }
  }

  int cmd_verify(std::string const& file, std::string const& format, Verbosity v) {
    auto path = file.empty() ? data_dir() / "paper.sub" : fs::path(file);
    std::vector<GoldenCheck> checks;
    try {
      checks = golden_checks(read_substitution(path));
    } catch (ParseError const& e) {
      std::cerr << "error: " << path.string() << ": " << e.what() << "\n";
      return exit_input;
    } catch (std::invalid_argument const& e) {
      std::cerr << "error: " << path.string() << ": " << e.what() << "\n";
      return exit_input;
    }
    std::size_t failed = 0;
    for (auto const& c : checks) {
      failed += !c.passed;
    }
    if (format == "json") {
      nlohmann::ordered_json j;
      j["file"]   = path.string();
      auto list   = nlohmann::ordered_json::array();
      for (auto const& c : checks) {
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.passed ? "" : c.detail}});
      }
      j["assertions"] = std::move(list);
      j["passed"]     = checks.size() - failed;
      j["failed"]     = failed;
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto const& c : checks) {
        if (!v.quiet || !c.passed) {
          std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
          if (!c.passed && !c.detail.empty()) {
            std::cout << "\n       " << c.detail;
          }
          std::cout << "\n";
        }
      }
      if (failed == 0) {
        std::cout << "all " << checks.size() << " golden assertions pass\n";
      } else {
        auto first = std::find_if(checks.begin(), checks.end(), [](auto const& c) { return !c.passed; });
        std::cout << failed << " of " << checks.size()
                  << " golden assertions failed; first: " << first->name << "\n";
      }
    }
    return failed == 0 ? exit_ok : exit_verify;
  }

  struct OracleArgs {
    std::string   suite  = "all";
    std::size_t   degree = 4;
    std::size_t   samples = 40;
    std::uint64_t seed   = 20240611;
    std::string   format = "text";
  };

  int cmd_oracle(OracleArgs const& a, Verbosity v) {
    namespace eo = ellis::oracle;
    std::vector<eo::Report> reports;
    auto want = [&a](char const* s) { return a.suite == "all" || a.suite == s; };

    eo::CorpusOptions co;
    co.random_samples = a.samples;
    co.seed           = a.seed;
    eo::ReesBounds rb;
    rb.seed = a.seed;

    if (want("cpreg")) {
      reports.push_back(eo::verify_cpreg_criterion(a.degree));
    }
    if (want("kernel") || want("union")) {
      auto c = eo::corpus(co);
      if (want("kernel")) {
        reports.push_back(eo::verify_kernel_structure(c));
      }
      if (want("union")) {
        reports.push_back(eo::verify_union_of_groups(c));
      }
    }
    if (want("rees")) {
      reports.push_back(eo::verify_rees_roundtrip(rb));
    }
    if (want("dichotomy")) {
      reports.push_back(eo::verify_left_simple_dichotomy(rb));
    }

    std::size_t failures = 0, instances = 0;
    for (auto const& r : reports) {
      failures += r.failures.size();
      instances += r.instances;
    }
    if (a.format == "json") {
      nlohmann::ordered_json j;
      auto list = nlohmann::ordered_json::array();
      for (auto const& r : reports) {
        list.push_back(eo::to_json(r));
      }
      j["suites"]    = std::move(list);
      j["instances"] = instances;
      j["failures"]  = failures;
      std::cout << j.dump(2) << "\n";
    } else {
      for (auto const& r : reports) {
        std::cout << r.suite << ": " << r.instances << " instances, " << r.checks << " checks, "
                  << r.failures.size() << " failures\n";
        if (!v.quiet) {
          for (auto const& [k, val] : r.counts.items()) {
            std::cout << "  " << k << ": " << val.dump() << "\n";
          }
        }
        std::size_t shown = 0;
        for (auto const& f : r.failures) {
          if (shown++ == (v.verbose ? r.failures.size() : 10)) {
            std::cout << "  ...\n";
            break;
          }
          std::cout << "  FAIL " << f.instance << ": " << f.what << "\n";
        }
      }
      if (reports.size() > 1) {
        std::cout << "total: " << instances << " instances, " << failures << " failures\n";
      }
    }
    return failures == 0 ? exit_ok : exit_verify;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ellis semigroups of constant-length substitution subshifts"};
  app.require_subcommand(1);
  Verbosity v;
  app.add_flag("-q,--quiet", v.quiet, "Less output");
  app.add_flag("-v,--verbose", v.verbose, "More output");

  AnalyzeArgs aa;
  auto*       an = app.add_subcommand("analyze", "Fixed points, pairs, fiber semigroup, classification, kernel model");
  an->add_option("path", aa.path, "Substitution file (text or JSON)")->required();
  an->add_option("--depth", aa.depth, "Odometer truncation depth K")->capture_default_str();
  an->add_option("--window", aa.window, "Scan horizon for Li-Yorke witnesses (0: l^6)")->capture_default_str();
  an->add_option("--witnesses", aa.witnesses, "Witnesses per Li-Yorke pair")->capture_default_str();
  an->add_option("--format", aa.formats, "Output formats")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  an->add_option("--out", aa.out, "Write <stem>.{txt,json,dot} into this directory");

  std::string vfile, vformat = "text";
  auto*       vp = app.add_subcommand("verify-paper-example", "Check the golden facts of the bundled three-letter example");
  vp->add_option("--file", vfile, "Substitution to check instead of the bundled one");
  vp->add_option("--format", vformat)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  OracleArgs oa;
  auto*      orc = app.add_subcommand("oracle", "Brute-force checks of the semigroup algebra");
  orc->add_option("suite", oa.suite)
      ->check(CLI::IsMember({"cpreg", "kernel", "union", "rees", "dichotomy", "all"}))
      ->capture_default_str();
  orc->add_option("--degree", oa.degree, "Largest degree for cpreg")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  orc->add_option("--samples", oa.samples, "Random degree 4 closures in the corpus")->capture_default_str();
  orc->add_option("--seed", oa.seed, "Seed for sampled instances")->capture_default_str();
  orc->add_option("--format", oa.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_input;
  }

  try {
    if (*an) {
      return cmd_analyze(aa, v);
    }
    if (*vp) {
      return cmd_verify(vfile, vformat, v);
    }
    return cmd_oracle(oa, v);
  } catch (ConsistencyError const& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return exit_verify;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
}
