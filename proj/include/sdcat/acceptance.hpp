#pragma once

// The acceptance suite: one verdict per criterion, each under a fixed time
// limit. Weak equivalences cannot be certified finitely, so the homotopy
// statements are checked through homology in the valid range.

#include <string>
#include <vector>

#include "sdcat/homology.hpp"
#include "sdcat/subdivision.hpp"

namespace sdcat {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

struct AcceptanceOptions {
  unsigned seed = 20240611;
  int random_categories = 25;
};

CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// `[PASS] 3 title (0.41 s / 120 s): detail`
std::string format_result(const CriterionResult& r);

/// H_* of the nerve of Sd(C)_{≤cap}. Valid up to cap - 2 unless the nerve of
/// C is finite and covered by the cap, in which case Sd(C)_{≤cap} is Sd(C).
HomologyResult sd_homology(const SdCategory& sd);

/// Every non-identity arrow raises dimension and none is invertible.
/// Returns an empty string or a description of the first failure.
std::string direct_category_violation(const SdCategory& sd);

}  // namespace sdcat
