#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>

#include "schlicht/cli/commands.hpp"
#include "schlicht/cli/report.hpp"
#include "schlicht/cli/runbook.hpp"
#include "schlicht/parallel.hpp"

using namespace schlicht;
using namespace schlicht::cli;

namespace {

ReportDocument sample_document() {
  ReportDocument d;
  d.command = "check-u";
  d.function_id = "f1@rotate:0.5";
  d.check = "u-membership";
  d.params = {{"rho_max", 0.999}, {"per_radius", nlohmann::json::array({1, 2})}};
  d.verdict = "HOLDS_NUMERICALLY";
  d.extremal = Extremal::at(Complex(0.1, -0.2), Complex(0.3, 0.4));
  d.margin = 0.5;
  d.elapsed_ms = 12;
  return d;
}

std::set<std::string> keys(const nlohmann::json& j) {
  std::set<std::string> out;
  for (auto it = j.begin(); it != j.end(); ++it) out.insert(it.key());
  return out;
}

std::set<std::string> failing(const std::vector<ReportDocument>& docs) {
  std::set<std::string> out;
  for (const auto& d : docs) {
    if (d.verdict != "PASS") out.insert(d.check);
  }
  return out;
}

ReportDocument without_timing(ReportDocument d) {
  d.elapsed_ms = 0;
  return d;
}

}  // namespace

TEST_CASE("report documents") {
  SUBCASE("round trip") {
    const ReportDocument d = sample_document();
    const nlohmann::json j = d;
    CHECK(j.get<ReportDocument>() == d);
    CHECK(nlohmann::json::parse(j.dump()).get<ReportDocument>() == d);
    CHECK(std::abs(d.extremal.modulus - 0.5) < 1e-15);
  }
  SUBCASE("exact key set") {
    const nlohmann::json j = sample_document();
    CHECK(keys(j) == std::set<std::string>{"tool_version", "command", "function_id", "check", "params", "verdict",
                                           "extremal", "margin", "elapsed_ms"});
    CHECK(keys(j["extremal"]) == std::set<std::string>{"z_re", "z_im", "value_re", "value_im", "modulus"});
    CHECK(j["tool_version"] == "0.1.0");
  }
  SUBCASE("verdicts") {
    for (const char* v : {"HOLDS_NUMERICALLY", "FAILS", "INCONCLUSIVE", "PASS", "FAIL"}) CHECK(is_valid_verdict(v));
    CHECK_FALSE(is_valid_verdict("OK"));
    nlohmann::json j = sample_document();
    j["verdict"] = "MAYBE";
    CHECK_THROWS(j.get<ReportDocument>());
    j = sample_document();
    j.erase("margin");
    CHECK_THROWS(j.get<ReportDocument>());
  }
  SUBCASE("one document is an object, several an array") {
    const ReportDocument d = sample_document();
    CHECK(documents_to_json({d}).is_object());
    const nlohmann::json many = documents_to_json({d, d});
    CHECK(many.is_array());
    CHECK(documents_from_json(many).size() == 2);
    CHECK(documents_from_json(documents_to_json({d})).front() == d);
  }
  SUBCASE("file output") {
    const auto path = std::filesystem::temp_directory_path() / "schlicht_report_test.json";
    write_documents(path.string(), {sample_document()});
    std::ifstream in(path);
    CHECK(documents_from_json(nlohmann::json::parse(in)).front() == sample_document());
    std::filesystem::remove(path);
  }
}

TEST_CASE("argument helpers") {
  CHECK(parse_n_range("2..20") == std::pair{2, 20});
  CHECK(parse_n_range("5") == std::pair{5, 5});
  CHECK_THROWS(parse_n_range("5..3"));
  CHECK_THROWS(parse_n_range("a..b"));
}

TEST_CASE("check-u command") {
  const CommandResult k = run_check_u({.function = "koebe"});
  CHECK(k.exit_code == kExitOk);
  REQUIRE(k.documents.size() == 1);
  CHECK(k.documents[0].verdict == "HOLDS_NUMERICALLY");
  CHECK(k.documents[0].command == "check-u");

  const CommandResult f0 = run_check_u({.function = "f0"});
  CHECK(f0.exit_code == kExitFail);
  const ReportDocument& d = f0.documents.at(0);
  CHECK(d.verdict == "FAILS");
  CHECK(std::abs(d.extremal.z_re - 0.9) < 1e-12);
  CHECK(std::abs(d.extremal.z_im) < 1e-12);
  CHECK(d.margin < 0.0);

  const CommandResult id = run_check_u({.function = "identity"});
  CHECK(id.documents.at(0).extremal.modulus == 0.0);
  CHECK(id.documents.at(0).margin == 1.0);

  const CommandResult band = run_check_u({.function = "u_family:3:0.6859", .rho_max = 0.91, .delta = 0.05});
  CHECK(band.exit_code == kExitInconclusive);
  CHECK(band.documents.at(0).verdict == "INCONCLUSIVE");
}

TEST_CASE("sample dump") {
  const auto path = std::filesystem::temp_directory_path() / "schlicht_samples_test.csv";
  run_check_u({.function = "koebe", .circles = 2, .samples = 16, .dump_samples = path.string()});
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "rho,theta,value_re,value_im,modulus");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 32);
  std::filesystem::remove(path);
}

TEST_CASE("grunsky command") {
  const CommandResult id = run_grunsky({.function = "identity", .order = 6, .trials = 10});
  CHECK(id.exit_code == kExitOk);
  const nlohmann::json& table = id.documents.at(0).params.at("table");
  REQUIRE(table.size() == 7);
  for (const auto& row : table) {
    for (const auto& entry : row) CHECK((entry[0] == 0.0 && entry[1] == 0.0));
  }
  const CommandResult k = run_grunsky({.function = "koebe", .order = 8, .trials = 20});
  CHECK(k.documents.at(0).verdict == "PASS");
  CHECK(std::abs(k.documents.at(0).params.at("table")[2][2][0].get<double>() + 0.5) < 1e-12);
}

TEST_CASE("two-point and radius commands") {
  const CommandResult t = run_two_point({.function = "koebe", .r = 0.3});
  CHECK(t.exit_code == kExitOk);
  CHECK(std::abs(t.documents.at(0).extremal.modulus - std::pow(0.6 / 0.91, 2)) < 1e-4);
  CHECK(run_two_point({.function = "koebe", .r = 0.5}).exit_code == kExitFail);

  const CommandResult r = run_radius({.function = "koebe"});
  CHECK(r.exit_code == kExitOk);
  CHECK(std::abs(r.documents.at(0).params.at("r_star").get<double>() - (std::sqrt(2.0) - 1.0)) < 1e-6);

  const CommandResult none = run_radius({.function = "koebe", .threshold = 0.99, .lo = 0.5});
  CHECK(none.exit_code == kExitFail);
  CHECK(none.documents.at(0).verdict == "FAIL");
}

TEST_CASE("inequalities command") {
  const auto csv = std::filesystem::temp_directory_path() / "schlicht_violations_test.csv";
  const CommandResult r =
      run_inequalities({.n_min = 2, .n_max = 5, .phi_count = 500, .x_count = 200, .violations_csv = csv.string()});
  CHECK(r.exit_code == kExitOk);
  REQUIRE(r.documents.size() == 3);
  for (const auto& d : r.documents) CHECK(d.verdict == "PASS");
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,check,a,b,value");
  std::filesystem::remove(csv);
}

TEST_CASE("verify-paper runbook") {
  const std::vector<ReportDocument> base = run_verify_paper();
  REQUIRE(base.size() == runbook_checks().size());
  for (std::size_t k = 0; k < base.size(); ++k) {
    CHECK(base[k].check == runbook_checks()[k]);
    CHECK(base[k].command == "verify-paper");
    CHECK((base[k].verdict == "PASS" || base[k].verdict == "FAIL"));
  }

  SUBCASE("mislabelling f0 as a member flips exactly the membership entry") {
    RunbookConfig config;
    config.expected_u_members.push_back("f0");
    std::set<std::string> expected = failing(base);
    expected.insert("membership-table");
    CHECK(failing(run_verify_paper(config)) == expected);
    CHECK_FALSE(failing(base).contains("membership-table"));
  }
  SUBCASE("independent of the worker count") {
    const unsigned saved = max_threads();
    set_max_threads(1);
    const std::vector<ReportDocument> one = run_verify_paper();
    set_max_threads(4);
    const std::vector<ReportDocument> four = run_verify_paper();
    set_max_threads(saved);
    REQUIRE(one.size() == four.size());
    for (std::size_t k = 0; k < one.size(); ++k) CHECK(without_timing(one[k]) == without_timing(four[k]));
  }
}
