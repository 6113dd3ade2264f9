#ifndef METASPEC_ACCEPTANCE_HPP_
#define METASPEC_ACCEPTANCE_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace metaspec::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every bundled criterion whose name contains `filter` (all when empty).
std::vector<CriterionResult> run(const std::string& filter = "");

// Prints one pass/fail line per criterion; returns the number of failures.
int run_and_print(std::ostream& out, const std::string& filter = "");

}  // namespace metaspec::acceptance

#endif  // METASPEC_ACCEPTANCE_HPP_
