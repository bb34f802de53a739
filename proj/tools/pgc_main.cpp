// CLI for power-graph connectivity analysis.
//
// Exit codes: 0 success, 1 mathematical disagreement found, 2 usage or input
// error, 3 cap refusal.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "pgc/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace pgc;

Family parse_family(const std::string& name) {
  if (name == "cyclic") return Family::Cyclic;
  if (name == "dihedral") return Family::Dihedral;
  if (name == "dicyclic") return Family::Dicyclic;
  throw CLI::ValidationError("--family must be cyclic, dihedral or dicyclic");
}

GroupSpec parse_spec(const std::string& family, i64 n) {
  switch (parse_family(family)) {
    case Family::Cyclic: return GroupSpec::cyclic(n);
    case Family::Dihedral: return GroupSpec::dihedral(n);
    case Family::Dicyclic: return GroupSpec::dicyclic(n);
  }
  throw CLI::ValidationError("bad family");
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::invalid_argument("cannot open output file " + path);
  f << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power graph connectivity toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Caps caps;
  int threads = 0;
  u64 seed = 1;
  app.add_option("--oracle-cap", caps.oracle_cap, "vertex-mode oracle size limit");
  app.add_option("--class-cap", caps.class_cap, "class-mode twin class limit");
  app.add_option("--threads", threads, "worker threads (0 = hardware default)");
  app.add_option("--seed", seed, "seed for randomized property checks");

  std::string family = "cyclic", out_path;
  i64 n = 1, from = 1, to = 1;
  bool as_json = false;
  std::string check_list, lemma_id_token;

  auto* an = app.add_subcommand("analyze", "single-instance connectivity report");
  an->add_option("--family", family, "group family")->required();
  an->add_option("--n", n, "family parameter")->required();
  an->add_flag("--json", as_json, "emit JSON instead of text");

  auto* sw = app.add_subcommand("sweep", "report table over a parameter range");
  sw->add_option("--family", family, "group family")->required();
  sw->add_option("--from", from, "first n")->required();
  sw->add_option("--to", to, "last n")->required();
  sw->add_option("--check", check_list, "comma-separated lemma check ids to run per row");
  sw->add_option("--out", out_path, "write to file instead of stdout");
  sw->add_flag("--json", as_json, "emit JSON instead of CSV");

  auto* ce = app.add_subcommand("certify", "emit a certificate document");
  ce->add_option("--family", family, "group family")->required();
  ce->add_option("--n", n, "family parameter")->required();
  ce->add_option("--out", out_path, "write to file instead of stdout");

  auto* le = app.add_subcommand("lemma", "run one verification campaign");
  le->add_option("--id", lemma_id_token, "check id, e.g. L-YK")->required();
  le->add_option("--to", to, "range bound (0 = per-check default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif
  const ExecPolicy policy = threads == 1 ? ExecPolicy::Serial : ExecPolicy::Parallel;

  try {
    if (an->parsed()) {
      const auto report = analyze(parse_spec(family, n), caps, policy);
      std::cout << (as_json ? report_json(report) : report_text(report));
      return report.any_disagreement() ? 1 : 0;
    }

    if (sw->parsed()) {
      std::set<LemmaCheckId> checks;
      std::stringstream ss(check_list);
      std::string token;
      while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        auto id = parse_lemma_id(token);
        if (!id) throw std::invalid_argument("unknown check id: " + token);
        checks.insert(*id);
      }
      const auto result = sweep(parse_family(family), from, to, checks, caps, policy, seed);
      write_output(out_path, as_json ? to_json(result) : to_csv(result));
      for (const auto& f : result.check_failures) std::cerr << "check failure: " << f << "\n";
      return result.any_disagreement() ? 1 : 0;
    }

    if (ce->parsed()) {
      const auto cert = certify(parse_spec(family, n), caps, policy, seed);
      write_output(out_path, certificate_json(cert));
      return (cert.kappa_verified && cert.ckappa_verified) ? 0 : 1;
    }

    if (le->parsed()) {
      const auto id = parse_lemma_id(lemma_id_token);
      if (!id) {
        std::cerr << "unknown check id: " << lemma_id_token << "\nknown ids:\n";
        for (const auto& [i, name] : lemma_check_ids())
          std::cerr << "  " << name << "  " << lemma_description(i) << "\n";
        return 2;
      }
      const i64 range = to > 1 ? to : lemma_default_range(*id);
      const auto outcome = verify_lemma(*id, range, caps, policy, seed);
      std::cout << lemma_id_name(*id) << " (" << lemma_description(*id) << ")\n";
      std::cout << "range: n <= " << outcome.range << ", instances checked: " << outcome.checked
                << "\n";
      if (!outcome.note.empty()) std::cout << "note: " << outcome.note << "\n";
      if (outcome.counterexamples.empty()) {
        std::cout << "result: PASS (no counterexamples)\n";
      } else {
        std::cout << "result: " << (outcome.pass ? "REPORTED" : "FAIL") << " ("
                  << outcome.counterexamples.size() << " rows)\n";
        for (const auto& c : outcome.counterexamples) std::cout << "  " << c << "\n";
      }
      return outcome.pass ? 0 : 1;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap refusal: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
