// Acceptance run: one PASS/FAIL line per criterion, built from the same
// verification suites the CLI exposes, at seed 42 and 1000 base samples.
// Failing checks are listed under their criterion with value and witness.

#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hellinger/verify.hpp"

using namespace hellinger;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::string prefix;  // empty: every check of the suite
};

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "d3 triangle counterexample", "counterexamples", "d3."},
      {2, "d4 triangle counterexample", "counterexamples", "d4."},
      {3, "trace chain and divergence ordering", "trace-chain", ""},
      {4, "divergence axioms for Phi3 and Phi4", "divergence-axioms", ""},
      {5, "derivative engine", "derivatives", ""},
      {6, "barycentre fixed points", "barycentre", ""},
      {7, "m = 2 closed forms and the refuted d4 guess", "d4-guess", ""},
      {8, "Bregman barycentres and variance", "bregman", ""},
      {9, "Legendre-condition counterexamples", "legendre-cex", ""},
      {10, "metric sanity for d1 and d2", "metric", ""},
  };

  const VerifyOptions options{.seed = 42, .samples = 1000};
  std::vector<SuiteReport> reports = run_all(options);
  const auto find = [&](const std::string& name) -> const SuiteReport& {
    for (const SuiteReport& r : reports)
      if (r.suite == name) return r;
    std::fprintf(stderr, "missing suite %s\n", name.c_str());
    std::exit(2);
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    std::vector<const Check*> selected, failures;
    for (const Check& k : find(c.suite).checks) {
      if (!c.prefix.empty() && !starts_with(k.name, c.prefix)) continue;
      selected.push_back(&k);
      if (!k.passed) failures.push_back(&k);
    }
    const bool pass = !selected.empty() && failures.empty();
    if (!pass) ++failed;
    std::printf("criterion %2d  %-4s  %s  (%zu checks)\n", c.id, pass ? "PASS" : "FAIL",
                c.title.c_str(), selected.size());
    for (const Check* k : failures) {
      std::printf("    failed: %s = %.6g, required %s %.3g%s%s\n", k->name.c_str(), k->value,
                  std::string(to_string(k->relation)).c_str(), k->threshold,
                  k->detail.empty() ? "" : "; ", k->detail.c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
