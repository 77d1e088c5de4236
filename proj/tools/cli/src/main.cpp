#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schlicht/cli/commands.hpp"
#include "schlicht/cli/runbook.hpp"
#include "schlicht/error.hpp"
#include "schlicht/parallel.hpp"

using namespace schlicht::cli;

namespace {

bool is_usage_error(schlicht::ErrorCode code) {
  using schlicht::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownId:
    case ErrorCode::BadParams:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::OutsideDisk:
    case ErrorCode::DegenerateRadius:
      return true;
    default:
      return false;
  }
}

void print_summary(const std::vector<ReportDocument>& docs) {
  for (const auto& d : docs) {
    std::printf("%-26s %-18s %-20s margin=%.6g (%lld ms)\n", d.check.c_str(), d.verdict.c_str(),
                d.function_id.c_str(), d.margin, static_cast<long long>(d.elapsed_ms));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for univalent functions on the unit disk"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 0;
  std::string out_path;
  app.add_option("--threads", threads, "Cap on worker threads (0 = hardware)");
  app.add_option("--out", out_path, "Write the JSON report here");

  CheckUOptions check_u;
  auto* cmd_check_u = app.add_subcommand("check-u", "Sample |(z/f)^2 f' - 1| < 1 on circles");
  cmd_check_u->add_option("--function", check_u.function, "Function spec, e.g. koebe or f1@rotate:0.5")->required();
  cmd_check_u->add_option("--rho-max", check_u.rho_max, "Outermost circle radius")->capture_default_str();
  cmd_check_u->add_option("--circles", check_u.circles, "Number of circles")->capture_default_str();
  cmd_check_u->add_option("--samples", check_u.samples, "Samples per circle")->capture_default_str();
  cmd_check_u->add_option("--delta", check_u.delta, "Inconclusive band half-width")->capture_default_str();
  cmd_check_u->add_option("--dump-samples", check_u.dump_samples, "CSV of every sample");

  GrunskyOptions grunsky;
  grunsky.seed = seed_from_env();
  auto* cmd_grunsky = app.add_subcommand("grunsky", "Grunsky coefficients and inequality trials");
  cmd_grunsky->add_option("--function", grunsky.function, "Function spec")->required();
  cmd_grunsky->add_option("--order", grunsky.order, "Table order N")->capture_default_str();
  cmd_grunsky->add_option("--trials", grunsky.trials, "Random x-vectors")->capture_default_str();
  cmd_grunsky->add_option("--length", grunsky.vector_length, "Length of each x-vector")->capture_default_str();

  TwoPointOptions two_point;
  bool two_point_no_refine = false;
  auto* cmd_two_point = app.add_subcommand("two-point", "Supremum of the two-point functional on a torus");
  cmd_two_point->add_option("--function", two_point.function, "Function spec")->required();
  cmd_two_point->add_option("--r", two_point.r, "Torus radius")->capture_default_str();
  cmd_two_point->add_option("--grid", two_point.grid, "Angles per circle")->capture_default_str();
  cmd_two_point->add_option("--threshold", two_point.threshold, "Bound to test")->capture_default_str();
  cmd_two_point->add_flag("--no-refine", two_point_no_refine, "Skip local refinement");

  RadiusOptions radius;
  bool radius_no_refine = false;
  auto* cmd_radius = app.add_subcommand("radius", "Bisect for the critical radius of a predicate");
  cmd_radius->add_option("--predicate", radius.predicate, "halfplane-plain | halfplane-power | two-point")
      ->capture_default_str()
      ->check(CLI::IsMember({"halfplane-plain", "halfplane-power", "two-point"}));
  cmd_radius->add_option("--function", radius.function, "Function spec")->required();
  cmd_radius->add_option("--n", radius.n, "Power n for halfplane-power")->capture_default_str();
  cmd_radius->add_option("--threshold", radius.threshold, "Override the default threshold");
  cmd_radius->add_option("--tolerance", radius.tolerance, "Bracket width")->capture_default_str();
  cmd_radius->add_option("--lo", radius.lo, "Lower bracket end")->capture_default_str();
  cmd_radius->add_option("--hi", radius.hi, "Upper bracket end")->capture_default_str();
  cmd_radius->add_option("--samples", radius.samples, "Samples per circle")->capture_default_str();
  cmd_radius->add_option("--grid", radius.grid, "Torus angles per circle")->capture_default_str();
  cmd_radius->add_flag("--no-refine", radius_no_refine, "Skip local refinement");

  InequalityOptions ineq;
  std::string n_range = "2..20";
  auto* cmd_ineq = app.add_subcommand("inequalities", "Grid scans of the scalar inequalities");
  cmd_ineq->add_option("--n", n_range, "Range a..b of n")->capture_default_str();
  cmd_ineq->add_option("--phi-points", ineq.phi_count, "Grid size in phi")->capture_default_str();
  cmd_ineq->add_option("--x-points", ineq.x_count, "Grid size in x on [0, 50]")->capture_default_str();
  cmd_ineq->add_option("--violations-csv", ineq.violations_csv, "CSV of violations");

  auto* cmd_verify = app.add_subcommand("verify-paper", "Run every reproducible check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (threads > 0) schlicht::set_max_threads(threads);
  two_point.refine = !two_point_no_refine;
  radius.refine = !radius_no_refine;

  try {
    CommandResult result;
    if (*cmd_check_u) {
      result = run_check_u(check_u);
    } else if (*cmd_grunsky) {
      result = run_grunsky(grunsky);
    } else if (*cmd_two_point) {
      result = run_two_point(two_point);
    } else if (*cmd_radius) {
      result = run_radius(radius);
    } else if (*cmd_ineq) {
      std::tie(ineq.n_min, ineq.n_max) = parse_n_range(n_range);
      result = run_inequalities(ineq);
    } else if (*cmd_verify) {
      RunbookConfig config;
      config.seed = seed_from_env();
      result = run_verify_paper_command(config);
    }
    print_summary(result.documents);
    if (!out_path.empty()) write_documents(out_path, result.documents);
    return result.exit_code;
  } catch (const schlicht::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
