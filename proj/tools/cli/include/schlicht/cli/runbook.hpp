#pragma once

// The full verification run: every reproducible claim checked at fixed
// tolerances, one ReportDocument (verdict PASS or FAIL) per entry.

#include <cstdint>
#include <string>
#include <vector>

#include "schlicht/cli/commands.hpp"
#include "schlicht/cli/report.hpp"

namespace schlicht::cli {

struct ExpectedFailure {
  std::string function;
  double rho;
  double modulus;  // max |T| on the circle, attained on the positive real axis
};

struct RunbookConfig {
  std::vector<std::string> expected_u_members{"half_plane:+1", "half_plane:-1", "two_pole:+1",  "two_pole:-1",
                                              "koebe",         "hexagonal:+1",  "hexagonal:-1", "f1",
                                              "u_family:2:1",  "u_family:3:0.5"};
  std::vector<ExpectedFailure> expected_failures{{"f0", 0.9, 1.672}, {"u_family:3:1", 0.9, 1.458}};
  std::uint64_t seed = 0;
};

/// Check names in run order.
const std::vector<std::string>& runbook_checks();

std::vector<ReportDocument> run_verify_paper(const RunbookConfig& config = {});

CommandResult run_verify_paper_command(const RunbookConfig& config = {});

}  // namespace schlicht::cli
