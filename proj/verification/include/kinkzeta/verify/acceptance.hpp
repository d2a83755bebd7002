// Acceptance gate: one pass/fail verdict per criterion.

#ifndef KINKZETA_VERIFY_ACCEPTANCE_HPP
#define KINKZETA_VERIFY_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace kinkzeta::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
  double seconds = 0;
};

constexpr int kCriteria = 9;

CriterionResult run_criterion(int id);

/// Criteria for a suite name: "all", a criterion number, or one of
/// special, resolvent, spectral, green, heat, zeta, energy, errata, periodic.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_suite(const std::string& suite);

/// "[PASS] 3 spectral cross-validation (1.2 s)".
std::string summary_line(const CriterionResult& r);

}  // namespace kinkzeta::verify

#endif  // KINKZETA_VERIFY_ACCEPTANCE_HPP
