#pragma once

// The verification suite: every reproduced number as a named check with its
// expected and computed value.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "commvar/irrlocus.hpp"

namespace commvar {

struct VerifyOptions {
  bool fast = false;  // primes {5, 13} instead of {5, 13, 17}
  std::uint64_t seed = 0;
  int max_rank = 4;   // cap for the classical series A-D
  unsigned workers = 0;
  bool tamper = false;
};

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string check_id;
  std::string paper_ref;
  nlohmann::json expected;
  nlohmann::json computed;
  CheckStatus status = CheckStatus::fail;
};

/// Runs all checks; the result is sorted by check_id.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

/// Array of {check_id, paper_ref, expected, computed, status}.
nlohmann::json report_json(const std::vector<CheckResult>& results);

/// 0 if all pass, 1 if any fails, otherwise 4 when something is inconclusive.
int report_exit_code(const std::vector<CheckResult>& results);

/// First failing check in check_id order, or nullptr.
const CheckResult* first_failure(const std::vector<CheckResult>& results);

/// Simple types of the classification table: A1..A_n, B2..B_n, C3..C_n,
/// D4..D_n (n = max_rank), then E6, E7, E8, F4, G2.
std::vector<std::pair<char, int>> table_types(int max_rank);

/// The six 3-dimensional spans over Q(i) listed for I(a_x), x = X_a1 in so5 (g = B2).
std::vector<std::vector<GaussVector>> so5_listed_spans(const LieAlgebra& g);

/// Union counts of the six 3-dimensional spans listed for the minimal orbit
/// of so5, from an independent enumeration, at p = 5 and p = 13.
inline constexpr unsigned long long kSo5SpanUnion5 = 565;
inline constexpr unsigned long long kSo5SpanUnion13 = 11869;

}  // namespace commvar
