#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "qpartition/verify.hpp"

using namespace qpart;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::function<SuiteResult()> run;
  bool show_notes;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "appendix tables reproduced by the recursion", [] { return verify_appendix(); }, false},
      {2, "recursion matches base enumeration, m1+m2+2m3 <= 5, s <= 14", [] { return verify_oracle(); }, false},
      {3, "brute = alternating = positive, q <= 30, t <= 10; alternating = brute, q <= 40, t <= 12",
       [] { return verify_forms(30, 10); }, false},
      {4, "product identities to q^60", [] { return verify_products(60); }, false},
      {5, "move bijection and triple count for weight <= 25", [] { return verify_bijection(25); }, false},
      {6, "worked examples", [] { return verify_examples(); }, false},
      {7, "closed forms, m1, m2 <= 6, m3 <= 3", [] { return verify_closed_forms(); }, true},
      {8, "h positive = h product = brute to q^40, t^12", [] { return verify_corollary(40, 12); }, false},
      {9, "positivity of positive forms and P polynomials", [] { return verify_positivity(30, 10); }, false},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (r.passed ? "PASS" : "FAIL") << " - " << c.title << " ("
              << timing << ")\n";
    if (c.show_notes || !r.passed)
      for (const auto& n : r.notes) std::cout << "    " << n << "\n";
    for (const auto& f : r.failures) std::cout << "    MISMATCH " << f << "\n";
    failed += !r.passed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
