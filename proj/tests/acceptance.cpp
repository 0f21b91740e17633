// Runs the twelve acceptance criteria one at a time, each against its own
// wall-clock limit, and prints one PASS/FAIL line per criterion.

#include "sigmakit/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <iomanip>
#include <iostream>

int main(int argc, char** argv) {
  using namespace sigmakit::verify;
  struct Limit {
    const char* name;
    double seconds;
  };
  const Limit limits[] = {
      {"characters", 1},      {"homomorphism", 30}, {"pl", 60},          {"matchings", 300},
      {"link", 60},           {"classification", 60}, {"morse", 120},    {"ascending", 300},
      {"popular", 120},       {"classifier", 1},    {"houghton", 300},   {"homology", 30},
  };
  Options options;
  options.parallel = false;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--seed") == 0)
      options.seed = std::strtoull(argv[i + 1], nullptr, 10);

  int failures = 0;
  int id = 0;
  for (const auto& limit : limits) {
    ++id;
    const Report report = run(limit.name, options);
    const Check& c = report.checks.front();
    const bool in_time = c.seconds < limit.seconds;
    const bool ok = c.passed && in_time;
    failures += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << ' ' << c.name
              << " (" << std::fixed << std::setprecision(2) << c.seconds << "s, limit "
              << std::setprecision(0) << limit.seconds << "s): " << c.detail
              << (in_time ? "" : "; over time") << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
