#pragma once

// Exhaustive checks of the index calculus over small S_d x A, reported one
// line per property.

#include <string>
#include <vector>

namespace malle {

struct CheckResult {
  std::string name;
  bool pass = true;
  long long cases = 0;
  std::string detail;  // first counterexample, if any
};

// d ranges over 1..dmax (3..dmax where d >= 3 is required) and A over every
// abelian group with |A| <= amax.
std::vector<CheckResult> verify_lemmas(int dmax, int amax);

}  // namespace malle
