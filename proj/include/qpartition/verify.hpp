#pragma once

#include <string>
#include <vector>

namespace qpart {

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::vector<std::string> notes;     // informational lines, always printed
  std::vector<std::string> failures;  // diff lines

  void fail(std::string line) {
    passed = false;
    failures.push_back(std::move(line));
  }
};

// Each suite pins its own window; max_q overrides the main q bound where the
// suite has one (0 keeps the default).
SuiteResult verify_appendix();
SuiteResult verify_examples();
SuiteResult verify_products(int max_q = 0);
SuiteResult verify_forms(int max_q = 0, int max_t = 0);
SuiteResult verify_corollary(int max_q = 0, int max_t = 0);
SuiteResult verify_closed_forms();
SuiteResult verify_oracle();
SuiteResult verify_bijection(int max_n = 0);
SuiteResult verify_positivity(int max_q = 0, int max_t = 0);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, int max_q);

}  // namespace qpart
