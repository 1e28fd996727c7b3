#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>

#include "commvar/verify.hpp"

using namespace commvar;
using nlohmann::json;

namespace {

const std::string kGolden = std::string(COMMVAR_TEST_DATA) + "/verify_fast_golden.json";

const std::vector<CheckResult>& fast_results() {
  static const std::vector<CheckResult> results = [] {
    VerifyOptions o;
    o.fast = true;
    return run_verification(o);
  }();
  return results;
}

// The golden file pins ids, references and expected values; computed values
// and statuses are checked separately.
json golden_view(const json& report) {
  json out = json::array();
  for (const auto& e : report)
    out.push_back({{"check_id", e["check_id"]}, {"paper_ref", e["paper_ref"]}, {"expected", e["expected"]}});
  return out;
}

}  // namespace

TEST_CASE("report schema") {
  const json report = report_json(fast_results());
  REQUIRE(report.is_array());
  REQUIRE(report.size() > 100);
  const std::set<std::string> keys{"check_id", "paper_ref", "expected", "computed", "status"};
  const std::set<std::string> statuses{"pass", "fail", "inconclusive"};
  std::string prev;
  for (const auto& e : report) {
    std::set<std::string> got;
    for (const auto& [k, v] : e.items()) got.insert(k);
    CHECK(got == keys);
    CHECK(e["check_id"].is_string());
    CHECK(e["paper_ref"].is_string());
    CHECK(statuses.count(e["status"].get<std::string>()) == 1);
    CHECK(e["check_id"].get<std::string>() > prev);
    prev = e["check_id"].get<std::string>();
  }
}

TEST_CASE("report matches the golden file") {
  const json view = golden_view(report_json(fast_results()));
  if (std::getenv("COMMVAR_UPDATE_GOLDEN") != nullptr) {
    std::ofstream(kGolden) << view.dump(1) << "\n";
  }
  std::ifstream in(kGolden);
  REQUIRE(in.good());
  const json golden = json::parse(in);
  REQUIRE(golden.size() == view.size());
  for (std::size_t i = 0; i < golden.size(); ++i) {
    CAPTURE(golden[i]["check_id"].get<std::string>());
    CHECK(golden[i] == view[i]);
  }
}

TEST_CASE("status follows the comparison") {
  for (const auto& c : fast_results()) {
    CAPTURE(c.check_id);
    if (c.status == CheckStatus::pass) CHECK(c.expected == c.computed);
    if (c.status == CheckStatus::fail) CHECK(c.expected != c.computed);
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  VerifyOptions o;
  o.fast = true;
  o.max_rank = 2;
  o.seed = 7;
  CHECK(report_json(run_verification(o)) == report_json(run_verification(o)));
}

TEST_CASE("a tampered structure table fails with the first failing check named") {
  VerifyOptions o;
  o.fast = true;
  o.max_rank = 2;
  o.tamper = true;
  const auto results = run_verification(o);
  CHECK(report_exit_code(results) == 1);
  REQUIRE(first_failure(results) != nullptr);
  std::set<std::string> failed;
  for (const auto& c : results)
    if (c.status == CheckStatus::fail) failed.insert(c.check_id);
  CHECK(failed.count("structure.jacobi.A2") == 1);
  CHECK(failed.count("structure.cyclic.B2") == 1);
  CHECK(failed.count("structure.jacobi.G2") == 1);
  CHECK(*failed.begin() == first_failure(results)->check_id);
}

TEST_CASE("exit codes") {
  CheckResult pass{"a", "", 1, 1, CheckStatus::pass};
  CheckResult fail{"b", "", 1, 2, CheckStatus::fail};
  CheckResult open{"c", "", 1, nullptr, CheckStatus::inconclusive};
  CHECK(report_exit_code({pass}) == 0);
  CHECK(report_exit_code({pass, open}) == 4);
  CHECK(report_exit_code({pass, open, fail}) == 1);
  CHECK(first_failure({pass, open}) == nullptr);
  CHECK_THROWS_AS(run_verification(VerifyOptions{false, 0, 0, 0, false}), InvalidArgument);
}

TEST_CASE("table of types") {
  const auto t = table_types(4);
  CHECK(t.size() == 4 + 3 + 2 + 1 + 5);
  CHECK(t.front() == std::pair<char, int>{'A', 1});
  CHECK(t.back() == std::pair<char, int>{'G', 2});
}
