#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "tractlab/axiom_checks.hpp"
#include "tractlab/builtins.hpp"
#include "tractlab/closures.hpp"
#include "tractlab/hyperfield.hpp"
#include "tractlab/json_io.hpp"
#include "tractlab/parallel.hpp"
#include "tractlab/perfection.hpp"
#include "tractlab/scorecard.hpp"

namespace {

using namespace tractlab;

int emit_reports(const std::vector<AxiomReport>& reports,
                 const std::string& format) {
  if (format == "json") {
    std::cout << reports_to_json(reports);
  } else {
    for (const AxiomReport& r : reports) std::cout << r.summary() << "\n";
  }
  return all_hold(reports) ? 0 : 1;
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

std::vector<AxiomReport> filter_reports(std::vector<AxiomReport> reports,
                                        const std::vector<std::string>& checks) {
  if (checks.empty()) return reports;
  std::vector<AxiomReport> out;
  for (const std::string& name : checks) {
    bool found = false;
    for (AxiomReport& r : reports)
      if (r.axiom == name) {
        out.push_back(std::move(r));
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown check: " + name);
  }
  return out;
}

int run_axioms(const std::string& tract_ref, const std::string& hyperfield_ref,
               const std::string& fmatroid_ref, int bound,
               const std::vector<std::string>& checks,
               const std::string& format, int jobs) {
  int sources = int(!tract_ref.empty()) + int(!hyperfield_ref.empty()) +
                int(!fmatroid_ref.empty());
  if (sources != 1)
    return usage_error("axioms needs exactly one of --tract, --hyperfield, "
                       "--fmatroid");

  if (!tract_ref.empty()) {
    Tract t = load_tract(tract_ref);
    auto run_one = [&](const std::string& name) -> AxiomReport {
      if (name == "T1") return check_t1(t);
      if (name == "T2") return check_t2(t);
      if (name == "T3") return check_t3(t, bound);
      if (name == "I") return check_idyll(t, bound);
      if (name == "F") return check_fusion(t, bound);
      if (name == "SF") return check_strong_fusion(t, bound, jobs);
      if (name == "MSF") return check_msf(t, bound, jobs);
      throw std::invalid_argument("unknown check: " + name);
    };
    std::vector<std::string> names =
        checks.empty()
            ? std::vector<std::string>{"T1", "T2", "T3", "I", "F", "SF", "MSF"}
            : checks;
    std::vector<AxiomReport> reports;
    for (const std::string& name : names) reports.push_back(run_one(name));
    return emit_reports(reports, format);
  }

  if (!hyperfield_ref.empty()) {
    Hyperfield h = load_hyperfield(hyperfield_ref);
    return emit_reports(filter_reports(check_hyperfield_axioms(h), checks),
                        format);
  }

  FMatroid fm = load_fmatroid(fmatroid_ref);
  return emit_reports(filter_reports(check_dual_pair(fm), checks), format);
}

int run_closure(const std::string& tract_ref, int bound,
                const std::string& format, bool sigma) {
  Tract t = load_tract(tract_ref);
  Tract closed = sigma ? sigma_closure(t, bound)
                       : fusion_closure(truncate3(t), bound);
  std::vector<FormalSum> members = closure_members(closed, bound);
  const std::string kind = sigma ? "sigma-closure" : "fusion-closure";
  if (format == "json") {
    std::cout << members_to_json(kind, t.name(), bound, members);
  } else {
    std::cout << kind << " of " << t.name() << " (bound " << bound
              << "): " << members.size() << " sums\n";
    for (const FormalSum& s : members) std::cout << "  " << s.str() << "\n";
  }
  return 0;
}

int emit_certificate(const Certificate& cert, const std::string& format) {
  if (format == "json") {
    std::cout << certificate_to_json(cert);
  } else {
    std::cout << cert.claim << " of " << cert.subject << " (coord bound "
              << cert.coord_bound << "): "
              << (cert.certified ? "certified" : "violated") << ", "
              << cert.vectors << " vectors, " << cert.covectors
              << " covectors, " << cert.pairs_checked << " pairs\n";
    if (cert.violation)
      std::cout << "  X=" << cert.violation->x.str()
                << ", Y=" << cert.violation->y.str()
                << ", pairing=" << cert.violation->inner.str() << "\n";
  }
  return cert.certified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for tracts, hyperfields, and matroids over "
               "tracts"};
  app.require_subcommand(1);

  std::string tract_ref, hyperfield_ref, fmatroid_ref;
  std::string format = "text";
  std::vector<std::string> checks;
  int bound = 6;
  int coord_bound = 2;
  int jobs = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", jobs,
                    "worker threads (0 = TRACTLAB_JOBS or serial)");
  };

  CLI::App* axioms = app.add_subcommand(
      "axioms", "check tract, hyperfield, or dual-pair axioms");
  axioms->add_option("--tract", tract_ref, "builtin:<name> or JSON file");
  axioms->add_option("--hyperfield", hyperfield_ref,
                     "builtin:<name> or JSON file");
  axioms->add_option("--fmatroid", fmatroid_ref,
                     "fixture:<key> or JSON file");
  axioms->add_option("--bound", bound, "norm bound for bounded checks");
  axioms->add_option("--check", checks, "axioms to run (default: all)");
  add_common(axioms);

  CLI::App* closure = app.add_subcommand(
      "closure", "fusion closure of a tract's norm-3 truncation");
  closure->add_option("--tract", tract_ref, "builtin:<name> or JSON file")
      ->required();
  closure->add_option("--bound", bound, "norm bound of the closure");
  add_common(closure);

  CLI::App* sigma =
      app.add_subcommand("sigma", "strong-fusion saturation of a tract");
  sigma->add_option("--tract", tract_ref, "builtin:<name> or JSON file")
      ->required();
  sigma->add_option("--bound", bound, "norm bound of the saturation");
  add_common(sigma);

  CLI::App* stringent =
      app.add_subcommand("stringent", "hypersum singleton test");
  stringent->add_option("--hyperfield", hyperfield_ref,
                        "builtin:<name> or JSON file")
      ->required();
  add_common(stringent);

  CLI::App* hap = app.add_subcommand(
      "hap", "closure of the truncation against the full null set");
  hap->add_option("--hyperfield", hyperfield_ref, "builtin:<name> or JSON file")
      ->required();
  hap->add_option("--bound", bound, "norm bound of the comparison");
  add_common(hap);

  CLI::App* perfect =
      app.add_subcommand("perfect", "vector/covector orthogonality");
  perfect->add_option("--fmatroid", fmatroid_ref, "fixture:<key> or JSON file")
      ->required();
  add_common(perfect);

  CLI::App* strong = app.add_subcommand(
      "strong-perfect", "generalized vector/covector orthogonality");
  strong->add_option("--fmatroid", fmatroid_ref, "fixture:<key> or JSON file")
      ->required();
  strong->add_option("--coord-bound", coord_bound,
                     "per-coordinate norm bound");
  add_common(strong);

  CLI::App* wedge_check = app.add_subcommand(
      "wedge-check", "wedges of covectors stay covectors");
  wedge_check->add_option("--fmatroid", fmatroid_ref,
                          "fixture:<key> or JSON file")
      ->required();
  wedge_check->add_option("--coord-bound", coord_bound,
                          "per-coordinate norm bound");
  add_common(wedge_check);

  CLI::App* minors_check = app.add_subcommand(
      "minors-check", "minor restrictions and the support property");
  minors_check->add_option("--fmatroid", fmatroid_ref,
                           "fixture:<key> or JSON file")
      ->required();
  minors_check->add_option("--coord-bound", coord_bound,
                           "per-coordinate norm bound");
  add_common(minors_check);

  CLI::App* demo =
      app.add_subcommand("demo", "run the full example scorecard");
  demo->add_option("--jobs", jobs,
                   "worker threads (0 = TRACTLAB_JOBS or serial)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bound < 1 || coord_bound < 1)
      return usage_error("bounds must be positive");
    jobs = resolve_jobs(jobs);

    if (app.got_subcommand(axioms))
      return run_axioms(tract_ref, hyperfield_ref, fmatroid_ref, bound, checks,
                        format, jobs);
    if (app.got_subcommand(closure))
      return run_closure(tract_ref, bound, format, false);
    if (app.got_subcommand(sigma))
      return run_closure(tract_ref, bound, format, true);
    if (app.got_subcommand(stringent)) {
      AxiomReport r = check_stringency(load_hyperfield(hyperfield_ref));
      return emit_reports({r}, format);
    }
    if (app.got_subcommand(hap)) {
      AxiomReport r = check_hap(load_hyperfield(hyperfield_ref), bound);
      return emit_reports({r}, format);
    }
    if (app.got_subcommand(perfect))
      return emit_certificate(
          certify_perfection(load_fmatroid(fmatroid_ref), fmatroid_ref),
          format);
    if (app.got_subcommand(strong))
      return emit_certificate(
          certify_strong_perfection(load_fmatroid(fmatroid_ref), coord_bound,
                                    fmatroid_ref),
          format);
    if (app.got_subcommand(wedge_check)) {
      AxiomReport r =
          check_wedge_closure(load_fmatroid(fmatroid_ref), coord_bound);
      return emit_reports({r}, format);
    }
    if (app.got_subcommand(minors_check)) {
      FMatroid fm = load_fmatroid(fmatroid_ref);
      std::vector<AxiomReport> reports{check_minor_props(fm, coord_bound),
                                       check_supp_lemma(fm, coord_bound)};
      return emit_reports(reports, format);
    }
    if (app.got_subcommand(demo)) {
      auto results = run_scorecard(jobs);
      return print_scorecard(results, std::cout) ? 0 : 1;
    }
  } catch (const BoundError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return usage_error("no verb selected");
}
