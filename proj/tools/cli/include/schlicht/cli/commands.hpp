#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schlicht/cli/report.hpp"

namespace schlicht::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitUsage = 64;

struct CommandResult {
  int exit_code = kExitOk;
  std::vector<ReportDocument> documents;
};

/// SCHLICHT_SEED if set and numeric, else 0.
std::uint64_t seed_from_env();

struct CheckUOptions {
  std::string function;
  double rho_max = 0.999;
  int circles = 12;
  int samples = 4096;
  double delta = 1e-3;
  std::optional<std::string> dump_samples;
};

CommandResult run_check_u(const CheckUOptions& options);

struct GrunskyOptions {
  std::string function;
  int order = 16;
  int trials = 200;
  int vector_length = 8;
  std::uint64_t seed = 0;
};

CommandResult run_grunsky(const GrunskyOptions& options);

struct TwoPointOptions {
  std::string function;
  double r = 0.3;
  int grid = 128;
  bool refine = true;
  double threshold = 1.0;
};

CommandResult run_two_point(const TwoPointOptions& options);

struct RadiusOptions {
  std::string predicate = "halfplane-plain";  // halfplane-plain | halfplane-power | two-point
  std::string function;
  int n = 1;
  std::optional<double> threshold;
  double tolerance = 1e-6;
  double lo = 0.1;
  double hi = 0.9;
  int samples = 4096;
  int grid = 128;
  bool refine = true;
};

CommandResult run_radius(const RadiusOptions& options);

struct InequalityOptions {
  int n_min = 2;
  int n_max = 20;
  int phi_count = 10000;
  int x_count = 1000;
  std::optional<std::string> violations_csv;
};

CommandResult run_inequalities(const InequalityOptions& options);

/// "a..b" or a single integer.
std::pair<int, int> parse_n_range(const std::string& text);

}  // namespace schlicht::cli
