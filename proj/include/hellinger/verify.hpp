#pragma once

// Verification suites: seeded property sweeps and pinned reference values.
// Each suite builds its own Rng from the seed, so a suite's report does not
// depend on which other suites ran before it.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hellinger {

enum class Relation { LessEqual, Greater, GreaterEqual };

std::string_view to_string(Relation r);

struct Check {
  std::string name;
  double value = 0.0;
  Relation relation = Relation::LessEqual;
  double threshold = 0.0;
  bool passed = false;
  /// Witness or context, e.g. the offending sample index.
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Base sample count. Sweeps documented as "N samples" use N = samples;
  /// heavier sweeps use samples / 2 or samples / 10 (at least 1).
  std::size_t samples = 1000;
};

/// Suite names in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

std::vector<SuiteReport> run_all(const VerifyOptions& options);

}  // namespace hellinger
