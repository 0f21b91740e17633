#pragma once

// The verification suite: one deterministic check per claim, each seeded
// from the run seed and its own index so checks can run concurrently.

#include "sigmakit/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sigmakit::verify {

struct Options {
  std::uint64_t seed = 42;
  Budget budget;
  /// Caps r in the matching-connectivity check; negative keeps the defaults.
  int max_r = -1;
  bool parallel = true;
};

struct Check {
  int id = 0;
  std::string name;    // suite name, e.g. "matchings"
  std::string anchor;  // the claim being checked
  bool passed = false;
  std::string detail;  // deterministic summary of what was checked
  double seconds = 0;  // wall time; not part of the rendered report
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool passed() const;
  /// One line per check: `[PASS] name: anchor -- detail`. Timing-free, so
  /// two runs with the same seed render identically.
  std::string text() const;
};

/// characters, homomorphism, pl, matchings, link, classification, morse,
/// ascending, popular, classifier, houghton, homology (in that order).
const std::vector<std::string>& suite_names();

/// Runs one named check or "all". Throws std::invalid_argument on an
/// unknown name. A check that throws is reported as failed.
Report run(const std::string& suite, const Options& options = {});

}  // namespace sigmakit::verify
