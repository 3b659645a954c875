#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// One member of a parametric family, carrying the invariants the
// construction promises. Families never assert anything themselves; the
// verification side compares `predicted` against a freshly computed dossier.
struct FamilyInstance {
  std::string family;  // "thm710" | "cor73" | "ex5" | "ex2"
  std::map<std::string, Int> parameters;
  std::optional<NumericalSemigroup> seed;  // thm710 only
  NumericalSemigroup semigroup;
  nlohmann::json predicted;  // invariant key -> expected value
};

// H_n = <e, h_1 + ne, ..., h_{e-1} + ne> from the Apery set of a symmetric
// seed mod e. Requires a symmetric seed, e in seed, and e >= 3 (for e <= 2
// the lift collapses to a symmetric 2-generated semigroup and the promised
// invariants are vacuous).
FamilyInstance apery_lift_family(const NumericalSemigroup& seed, Int e, Int n);

// <3, c+3, 2c> for c >= 4, c not divisible by 3.
FamilyInstance multiplicity_three_family(Int c);

// <e, en+1..en+e-2, 2en-(e+1)> for e >= 3, n >= 2: minimal multiplicity,
// K/R free.
FamilyInstance minimal_multiplicity_family(Int e, Int n);

// <e, e+3..e+e-1, 2e+1, 2e+2> for e >= 4: K/R not free, B = <3,4,5>.
FamilyInstance nonfree_family(Int e);

struct PredictionCheck {
  std::string key;
  nlohmann::json expected;
  nlohmann::json observed;
  bool ok = false;
};

// Computes the observed value for every predicted key and compares.
std::vector<PredictionCheck> check_family_instance(const FamilyInstance& inst,
                                                   int horizon = 6);

}  // namespace nsring
