// One line per acceptance criterion; nonzero exit if any fails.

#include <cstdio>
#include <cstring>

#include "kinkzeta/verify/acceptance.hpp"

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  bool all = true;
  for (int id = 1; id <= kinkzeta::verify::kCriteria; ++id) {
    const auto r = kinkzeta::verify::run_criterion(id);
    std::printf("%s\n", kinkzeta::verify::summary_line(r).c_str());
    if (verbose || !r.passed)
      for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
