#pragma once

#include <string>
#include <vector>

namespace tamari_lab {

class Lab;

struct CheckOutcome {
  std::string name;
  std::string scope;  // what the run actually covered
  std::string note;   // failure detail when available
  bool pass = false;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckOutcome> outcomes;

  bool all_passed() const {
    for (const CheckOutcome& o : outcomes)
      if (!o.pass) return false;
    return true;
  }
};

// Registry order; these are the names `verify --check` accepts.
const std::vector<std::string>& available_checks();

// Runs the named checks in the given order. `order` scales the series checks;
// the counting checks run at their fixed desk scales. Unknown names raise
// SemanticError; a missing or corrupted data file fails that check instead of
// aborting the report; LimitError propagates.
VerificationReport run_checks(const std::vector<std::string>& names, int order,
                              Lab& lab);

}  // namespace tamari_lab
