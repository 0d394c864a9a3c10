// Acceptance suite: runs every built-in verification claim and prints one
// pass/fail line per criterion. Exit status 0 only when everything holds.

#include <chrono>
#include <cstdio>

#include "fk/verify.hpp"

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<fk::CriterionResult> results = fk::run_verification_suite();
  int passed = 0;
  bool all_pass = true;
  for (const fk::CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    passed += r.pass ? 1 : 0;
    std::printf("[%s] %2d. %-46s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.index, r.name.c_str(),
                r.seconds, r.got.c_str());
    if (!r.pass) std::printf("       expected: %s\n", r.expected.c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria pass in %.1fs\n", passed, results.size(), total);
  if (total > 300.0) {
    std::printf("[FAIL] suite exceeded the 5 minute budget\n");
    all_pass = false;
  }
  return all_pass ? 0 : 1;
}
