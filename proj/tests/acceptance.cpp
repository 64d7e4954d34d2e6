// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [id...]   (no arguments runs all 11 criteria)
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "oscdelta/verify.hpp"

int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) {
    ids.push_back(std::atoi(argv[i]));
  }
  int failures = 0;
  try {
    for (const auto& r : oscdelta::run_criteria(ids)) {
      std::printf("%s\n", oscdelta::format_criterion_line(r).c_str());
      std::fflush(stdout);
      if (!r.pass) ++failures;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "acceptance: %s\n", e.what());
    return 3;
  }
  return failures == 0 ? 0 : 1;
}
