#pragma once

#include <string>
#include <vector>

namespace qpf {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // one line, deterministic
  double seconds = 0;
};

struct AcceptanceOptions {
  std::vector<int> only;  // empty: all criteria 1..11
  unsigned long long seed = 0;  // random commutant elements and specialization points
};

inline constexpr int kCriterionCount = 11;

/// Runs one acceptance criterion. Library errors are caught and reported as
/// a failure with the message in detail.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});

/// Selected criteria in ascending id order.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt = {});

}  // namespace qpf
