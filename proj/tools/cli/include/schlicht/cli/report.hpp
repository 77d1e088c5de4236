#pragma once

// The JSON document every subcommand emits. Key names are a fixed contract;
// command-specific results live under "params".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "schlicht/complex.hpp"

namespace schlicht::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct Extremal {
  double z_re = 0.0;
  double z_im = 0.0;
  double value_re = 0.0;
  double value_im = 0.0;
  double modulus = 0.0;

  static Extremal at(Complex z, Complex value) { return {z.real(), z.imag(), value.real(), value.imag(), std::abs(value)}; }
  bool operator==(const Extremal&) const = default;
};

struct ReportDocument {
  std::string tool_version{kToolVersion};
  std::string command;
  std::string function_id;
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::string verdict;
  Extremal extremal;
  double margin = 0.0;
  std::int64_t elapsed_ms = 0;

  bool operator==(const ReportDocument&) const = default;
};

/// HOLDS_NUMERICALLY, FAILS, INCONCLUSIVE, PASS, FAIL
bool is_valid_verdict(std::string_view verdict) noexcept;

void to_json(nlohmann::json& j, const Extremal& e);
void from_json(const nlohmann::json& j, Extremal& e);
void to_json(nlohmann::json& j, const ReportDocument& doc);
/// Throws nlohmann::json exceptions on missing keys or an unknown verdict.
void from_json(const nlohmann::json& j, ReportDocument& doc);

/// One document is written as an object, several as an array.
nlohmann::json documents_to_json(const std::vector<ReportDocument>& docs);
std::vector<ReportDocument> documents_from_json(const nlohmann::json& j);

void write_documents(const std::string& path, const std::vector<ReportDocument>& docs);

}  // namespace schlicht::cli
