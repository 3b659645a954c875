#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

struct Violation {
  std::vector<Int> gens;
  std::string property;
  std::string observed;
  std::string expected;
};

struct VerificationReport {
  std::string suite;
  std::string corpus;  // human-readable descriptor
  long total = 0;      // items examined
  std::vector<Violation> violations;
  double elapsed_seconds = 0;
  // classification tally keyed by (genus, class name); genus-corpus suites only
  std::map<std::pair<Int, std::string>, long> counts;

  bool ok() const { return violations.empty(); }
};

struct SuiteOptions {
  int genus_max = -1;  // -1 = suite default
  Int f_max = -1;      // -1 = suite default (200)
  int workers = 0;     // 0 = NSRING_WORKERS env, else hardware concurrency
  int horizon = 6;
};

// Every numerical semigroup of genus <= genus_max, each exactly once,
// ordered by genus then lexicographic gap set. Children in the tree are
// H minus one minimal generator above the Frobenius number.
std::vector<NumericalSemigroup> enumerate_by_genus(int genus_max);

// All semigroups with exactly three minimal generators and Frobenius number
// <= f_max, ordered by generator triple.
std::vector<NumericalSemigroup> enumerate_three_generated(Int f_max);

// Streaming form of the above; `fn` is called in deterministic order.
void for_each_three_generated(Int f_max,
                              const std::function<void(const NumericalSemigroup&)>& fn);

const std::vector<std::string>& suite_names();

// Runs one named verification suite; throws std::invalid_argument on an
// unknown name. Zero violations means every checked identity held.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opt = {});

std::string report_to_text(const VerificationReport& r);
std::string report_to_json_lines(const VerificationReport& r);

}  // namespace nsring
