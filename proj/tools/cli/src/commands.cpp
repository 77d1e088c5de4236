#include "schlicht/cli/commands.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

#include "schlicht/catalog.hpp"
#include "schlicht/error.hpp"
#include "schlicht/grunsky.hpp"
#include "schlicht/inequality_lab.hpp"
#include "schlicht/koebe.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/radius.hpp"

namespace schlicht::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

nlohmann::json point_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

int exit_for(Status status) {
  switch (status) {
    case Status::HoldsNumerically: return kExitOk;
    case Status::Fails: return kExitFail;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

void write_sample_csv(const std::string& path, const std::vector<SampleRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.precision(17);
  out << "rho,theta,value_re,value_im,modulus\n";
  for (const auto& r : records) {
    out << r.rho << ',' << r.theta << ',' << r.value.real() << ',' << r.value.imag() << ',' << std::abs(r.value)
        << '\n';
  }
}

PredicateKind parse_predicate(const std::string& name) {
  if (name == "halfplane-plain") return PredicateKind::HalfplanePlain;
  if (name == "halfplane-power") return PredicateKind::HalfplanePower;
  if (name == "two-point") return PredicateKind::TwoPoint;
  throw Error(ErrorCode::InvalidArgument, "unknown predicate '" + name + "'");
}

}  // namespace

std::uint64_t seed_from_env() {
  const char* text = std::getenv("SCHLICHT_SEED");
  if (!text) return 0;
  std::uint64_t seed = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [ptr, ec] = std::from_chars(text, end, seed);
  if (ec != std::errc{} || ptr != end) return 0;
  return seed;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw Error(ErrorCode::InvalidArgument, "bad n range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int lo = parse_int(std::string_view(text).substr(0, dots));
  const int hi = parse_int(std::string_view(text).substr(dots + 2));
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty n range '" + text + "'");
  return {lo, hi};
}

CommandResult run_check_u(const CheckUOptions& options) {
  const auto start = Clock::now();
  const AnalyticFunction f = parse_function(options.function);
  SamplingPlan plan = SamplingPlan::with_outer_radius(options.rho_max, options.circles);
  plan.angular_count = options.samples;
  plan.delta = options.delta;

  std::vector<SampleRecord> records;
  const Verdict v = u_membership(f, plan, options.dump_samples ? &records : nullptr);
  if (options.dump_samples) write_sample_csv(*options.dump_samples, records);

  ReportDocument doc;
  doc.command = "check-u";
  doc.function_id = f.id();
  doc.check = "u-membership";
  doc.verdict = std::string(to_string(v.status));
  doc.extremal = Extremal::at(v.extremal_point, v.extremal_sample);
  doc.margin = 1.0 - v.extremal_value;

  nlohmann::json per_radius = nlohmann::json::array();
  for (const auto& c : v.per_radius_extrema) {
    per_radius.push_back({{"rho", c.rho}, {"max_modulus", c.extremum}, {"z_re", c.at.real()}, {"z_im", c.at.imag()}});
  }
  doc.params = {{"rho_max", options.rho_max}, {"circles", options.circles}, {"samples", options.samples},
                {"delta", options.delta},     {"renormalized", f.renormalized()}, {"per_radius", per_radius}};
  if (v.witness) doc.params["witness"] = point_json(*v.witness);
  doc.elapsed_ms = ms_since(start);
  return {exit_for(v.status), {std::move(doc)}};
}

CommandResult run_grunsky(const GrunskyOptions& options) {
  const auto start = Clock::now();
  if (options.order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  if (options.trials < 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 0");
  const AnalyticFunction f = parse_function(options.function);
  const GrunskyTable table = grunsky_table(f, options.order);
  const int m_len = std::min(options.vector_length, options.order);
  if (m_len < 1) throw Error(ErrorCode::DimensionMismatch, "vector length must be >= 1");

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal;
  std::vector<Complex> x(static_cast<std::size_t>(m_len));
  int violations = 0;
  double worst_ratio = 0.0;
  for (int t = 0; t < options.trials; ++t) {
    for (auto& xi : x) xi = Complex(normal(rng), normal(rng));
    const BoundCheck check = grunsky_inequality_check(table, x);
    if (!check.holds) ++violations;
    if (check.rhs > 0.0) worst_ratio = std::max(worst_ratio, check.lhs / check.rhs);
  }

  nlohmann::json rows = nlohmann::json::array();
  double max_abs = 0.0;
  Complex arg_value{};
  std::pair<int, int> arg{0, 0};
  for (int n = 0; n <= table.order; ++n) {
    nlohmann::json row = nlohmann::json::array();
    for (int m = 0; m <= table.order; ++m) {
      const Complex d = table(n, m);
      row.push_back({d.real(), d.imag()});
      if (n >= 1 && m >= 1 && std::abs(d) > max_abs) {
        max_abs = std::abs(d);
        arg = {n, m};
        arg_value = d;
      }
    }
    rows.push_back(std::move(row));
  }

  const bool pass = table.symmetric && violations == 0;
  ReportDocument doc;
  doc.command = "grunsky";
  doc.function_id = f.id();
  doc.check = "grunsky-inequality";
  doc.verdict = pass ? "PASS" : "FAIL";
  // For the coefficient table the "point" is the index pair (n, m).
  doc.extremal = Extremal::at(Complex(arg.first, arg.second), arg_value);
  doc.margin = 1.0 - worst_ratio;
  doc.params = {{"order", options.order},       {"trials", options.trials},   {"vector_length", m_len},
                {"seed", options.seed},         {"symmetric", table.symmetric}, {"violations", violations},
                {"max_lhs_over_rhs", worst_ratio}, {"table", rows}};
  doc.elapsed_ms = ms_since(start);
  return {pass ? kExitOk : kExitFail, {std::move(doc)}};
}

CommandResult run_two_point(const TwoPointOptions& options) {
  const auto start = Clock::now();
  const AnalyticFunction f = parse_function(options.function);
  const TwoPointSup sup = two_point_sup(f, options.r, options.grid, options.refine);
  const TwoPointResult at = two_point_functional(f, sup.argmax_zeta, sup.argmax_u);
  const bool pass = sup.sup < options.threshold;

  ReportDocument doc;
  doc.command = "two-point";
  doc.function_id = f.id();
  doc.check = "two-point-sup";
  doc.verdict = pass ? "PASS" : "FAIL";
  doc.extremal = Extremal::at(sup.argmax_zeta, at.value);
  doc.margin = options.threshold - sup.sup;
  doc.params = {{"r", options.r},
                {"grid", options.grid},
                {"refine", options.refine},
                {"threshold", options.threshold},
                {"sup", sup.sup},
                {"argmax_zeta", point_json(sup.argmax_zeta)},
                {"argmax_u", point_json(sup.argmax_u)}};
  doc.elapsed_ms = ms_since(start);
  return {pass ? kExitOk : kExitFail, {std::move(doc)}};
}

CommandResult run_radius(const RadiusOptions& options) {
  const auto start = Clock::now();
  RadiusProblem problem{.kind = parse_predicate(options.predicate), .function = parse_function(options.function)};
  problem.power_n = options.n;
  problem.threshold = options.threshold;
  problem.tolerance = options.tolerance;
  problem.lo = options.lo;
  problem.hi = options.hi;
  problem.angular_count = options.samples;
  problem.torus_grid = options.grid;
  problem.refine = options.refine;

  ReportDocument doc;
  doc.command = "radius";
  doc.function_id = problem.function.id();
  doc.check = options.predicate;
  doc.params = {{"predicate", options.predicate}, {"n", options.n},   {"threshold", problem.effective_threshold()},
                {"tolerance", options.tolerance}, {"lo", options.lo}, {"hi", options.hi}};

  int exit_code = kExitOk;
  try {
    const RadiusReport report = radius_bisect(problem);
    doc.verdict = "PASS";
    doc.params["r_star"] = report.r_star;
    doc.params["no_crossing"] = report.no_crossing;
    doc.params["iterations"] = report.bracket_history.size() - 1;
    const auto& last = report.bracket_history.back();
    doc.params["bracket"] = {last.first, last.second};
    if (report.failure_witness) {
      const CircleProbe& w = *report.failure_witness;
      doc.extremal = {w.at.real(), w.at.imag(), w.extremum, 0.0, std::abs(w.extremum)};
      doc.margin = std::abs(w.extremum - problem.effective_threshold());
      if (problem.kind == PredicateKind::TwoPoint) doc.params["witness_u"] = point_json(w.at_u);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoCrossing) throw;
    doc.verdict = "FAIL";
    doc.params["error"] = e.what();
    exit_code = kExitFail;
  }
  doc.elapsed_ms = ms_since(start);
  return {exit_code, {std::move(doc)}};
}

CommandResult run_inequalities(const InequalityOptions& options) {
  ScalarScanConfig config;
  config.n_min = options.n_min;
  config.n_max = options.n_max;
  config.phi_count = options.phi_count;
  config.x_count = options.x_count;
  config.validate();

  CommandResult result;
  std::vector<Violation> all;
  auto record = [&](const char* check, auto&& scan, const char* arg_a, const char* arg_b) {
    const auto start = Clock::now();
    const ScanOutcome out = scan();
    ReportDocument doc;
    doc.command = "inequalities";
    doc.function_id = "";
    doc.check = check;
    doc.verdict = out.clean() ? "PASS" : "FAIL";
    doc.extremal = {out.arg_a, out.arg_b, out.extremum, 0.0, std::abs(out.extremum)};
    doc.margin = out.extremum;
    doc.params = {{"n_min", config.n_min},
                  {"n_max", config.n_max},
                  {"extremum_n", out.arg_n},
                  {"z_re_meaning", arg_a},
                  {"z_im_meaning", arg_b},
                  {"violations", out.violations.size()}};
    if (out.closest_pole) {
      doc.params["closest_pole"] = *out.closest_pole;
      doc.params["excluded_near_pole"] = out.excluded;
    }
    all.insert(all.end(), out.violations.begin(), out.violations.end());
    if (!out.clean()) result.exit_code = kExitFail;
    doc.elapsed_ms = ms_since(start);
    result.documents.push_back(std::move(doc));
  };

  record("g-nonnegative", [&] { return scan_g_nonnegative(config); }, "phi", "");
  record("ineq22", [&] { return scan_ineq22(config); }, "x", "");
  record("psi-region", [&] { return psi_region_scan(config); }, "x", "y");
  // margins: min g, min(rhs - lhs), and -max Re psi (positive is safe)
  result.documents.back().margin = -result.documents.back().margin;

  if (options.violations_csv) {
    std::ofstream out(*options.violations_csv);
    if (!out) throw std::runtime_error("cannot open " + *options.violations_csv + " for writing");
    out.precision(17);
    out << "n,check,a,b,value\n";
    for (const auto& v : all) out << v.n << ',' << v.check << ',' << v.a << ',' << v.b << ',' << v.value << '\n';
  }
  return result;
}

}  // namespace schlicht::cli
