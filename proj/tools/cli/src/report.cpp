#include "schlicht/cli/report.hpp"

#include <array>
#include <fstream>
#include <stdexcept>

namespace schlicht::cli {

bool is_valid_verdict(std::string_view verdict) noexcept {
  static constexpr std::array<std::string_view, 5> kVerdicts{"HOLDS_NUMERICALLY", "FAILS", "INCONCLUSIVE", "PASS",
                                                             "FAIL"};
  for (auto v : kVerdicts) {
    if (v == verdict) return true;
  }
  return false;
}

void to_json(nlohmann::json& j, const Extremal& e) {
  j = {{"z_re", e.z_re}, {"z_im", e.z_im}, {"value_re", e.value_re}, {"value_im", e.value_im}, {"modulus", e.modulus}};
}

void from_json(const nlohmann::json& j, Extremal& e) {
  j.at("z_re").get_to(e.z_re);
  j.at("z_im").get_to(e.z_im);
  j.at("value_re").get_to(e.value_re);
  j.at("value_im").get_to(e.value_im);
  j.at("modulus").get_to(e.modulus);
}

void to_json(nlohmann::json& j, const ReportDocument& doc) {
  j = {
      {"tool_version", doc.tool_version},
      {"command", doc.command},
      {"function_id", doc.function_id},
      {"check", doc.check},
      {"params", doc.params},
      {"verdict", doc.verdict},
      {"extremal", doc.extremal},
      {"margin", doc.margin},
      {"elapsed_ms", doc.elapsed_ms},
  };
}

void from_json(const nlohmann::json& j, ReportDocument& doc) {
  j.at("tool_version").get_to(doc.tool_version);
  j.at("command").get_to(doc.command);
  j.at("function_id").get_to(doc.function_id);
  j.at("check").get_to(doc.check);
  doc.params = j.at("params");
  j.at("verdict").get_to(doc.verdict);
  j.at("extremal").get_to(doc.extremal);
  j.at("margin").get_to(doc.margin);
  j.at("elapsed_ms").get_to(doc.elapsed_ms);
  if (!is_valid_verdict(doc.verdict)) {
    throw nlohmann::json::other_error::create(501, "unknown verdict: " + doc.verdict, &j);
  }
}

nlohmann::json documents_to_json(const std::vector<ReportDocument>& docs) {
  if (docs.size() == 1) return docs.front();
  return docs;
}

std::vector<ReportDocument> documents_from_json(const nlohmann::json& j) {
  if (j.is_array()) return j.get<std::vector<ReportDocument>>();
  return {j.get<ReportDocument>()};
}

void write_documents(const std::string& path, const std::vector<ReportDocument>& docs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << documents_to_json(docs).dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace schlicht::cli
