// Acceptance suite: every release criterion, one pass/fail line each.
// All checks are exact integer comparisons; a criterion passes only when the
// whole corpus behind it is violation-free.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nsring/classify.hpp"
#include "nsring/constructs.hpp"
#include "nsring/corpus.hpp"
#include "nsring/relideal.hpp"
#include "nsring/threegen.hpp"
#include "oracles.hpp"

using namespace nsring;

namespace {

NumericalSemigroup make(const std::vector<Int>& gens) {
  return NumericalSemigroup::from_generators(gens);
}

bool expect(std::ostringstream& log, bool ok, const std::string& what) {
  if (!ok) log << " [" << what << "]";
  return ok;
}

bool suite_clean(std::ostringstream& log, const std::string& name,
                 const SuiteOptions& opt) {
  const auto rep = run_suite(name, opt);
  if (!rep.ok()) {
    log << " [" << name << ": " << rep.violations.size() << " violations, first: "
        << rep.violations.front().property << " observed "
        << rep.violations.front().observed << "]";
    return false;
  }
  log << " " << name << "(" << rep.total << " items, " << rep.elapsed_seconds << "s)";
  return true;
}

// --- criterion 1: reference vectors ---------------------------------------------

bool reference_vectors(std::ostringstream& log) {
  bool ok = true;
  {
    const auto d = compute_dossier(make({3, 7, 8}));
    ok &= expect(log, d.classification == Classification::TwoAGL, "378 class");
    ok &= expect(log, d.semigroup.pseudo_frobenius() == std::vector<Int>{4, 5},
                 "378 PF");
    ok &= expect(log, d.sally_rank == 2, "378 rank");
    ok &= expect(log,
                 d.conductor_c.min_element() == 6 && d.conductor_c.stable_from() == 6,
                 "378 conductor");
    ok &= expect(log,
                 d.b_semigroup->minimal_generators() == std::vector<Int>{3, 4, 5} &&
                     *d.b_classification == Classification::AGL,
                 "378 B");
    ok &= expect(log,
                 d.decomposition->free_rank == 1 && d.decomposition->socle_count == 0,
                 "378 decomp");
  }
  {
    const auto d = compute_dossier(make({5, 7, 9, 13}));
    ok &= expect(log, d.classification == Classification::TwoAGL, "57913 class");
    ok &= expect(log, d.type_r == 2, "57913 type");
    ok &= expect(log,
                 semigroup_from_ideal(d.blowup_s).minimal_generators() ==
                     std::vector<Int>{3, 5, 7},
                 "57913 blowup");
    const auto& b = *d.b_semigroup;
    ok &= expect(log, b.minimal_generators() == std::vector<Int>{5, 7, 8, 9, 11},
                 "57913 B gens");
    ok &= expect(log,
                 *d.b_classification == Classification::AGL &&
                     b.has_minimal_multiplicity() && b.multiplicity() == 5,
                 "57913 B shape");
    ok &= expect(log,
                 d.decomposition->free_rank == 1 && d.decomposition->socle_count == 0,
                 "57913 K/R = R/c");
  }
  {
    const auto d = compute_dossier(make({4, 9, 11, 14}));
    ok &= expect(log, d.classification == Classification::TwoAGL, "491114 class");
    ok &= expect(log,
                 d.semigroup.has_minimal_multiplicity() &&
                     d.semigroup.multiplicity() == 4,
                 "491114 min mult");
    ok &= expect(log, d.len_k_mod_r == 3, "491114 len K/R");
    ok &= expect(log,
                 d.decomposition->free_rank == 1 && d.decomposition->socle_count == 1,
                 "491114 decomp");
    ok &= expect(log, d.b_semigroup->minimal_generators() == std::vector<Int>{4, 5, 7},
                 "491114 B");
  }
  {
    const auto d = compute_dossier(make({4, 7, 9, 10}));
    ok &= expect(log, d.classification == Classification::TwoAGL, "47910 class");
    ok &= expect(log, d.type_r == 3, "47910 type");
    ok &= expect(log,
                 d.decomposition->free_rank == 1 && d.decomposition->socle_count == 1,
                 "47910 decomp");
    ok &= expect(log, d.b_semigroup->minimal_generators() == std::vector<Int>{3, 4, 5},
                 "47910 B");
  }
  return ok;
}

// --- criterion 4: Hilbert behaviour ------------------------------------------

bool hilbert_suite(std::ostringstream& log, int genus_max) {
  long checked = 0;
  for (const auto& h : enumerate_by_genus(genus_max)) {
    if (h.is_naturals()) continue;
    const auto ctx = canonical_context(h);
    const Int rank = rank_of(ctx);
    if (rank > 2) continue;
    const auto d = compute_dossier(h);
    ++checked;
    for (Int n = 1; n <= 6; ++n) {
      const Int value = d.hilbert_values[static_cast<std::size_t>(n)];
      const Int graded = d.sally_lengths[static_cast<std::size_t>(n - 1)];
      if (rank == 2) {
        if (value != d.e0 * (n + 1) - (d.e0 - d.len_r_mod_i + 2) || graded != 2) {
          log << " [2-AGL Hilbert fails for " << h.to_text() << " at n=" << n << "]";
          return false;
        }
      } else if (rank == 1) {
        if (value != (d.type_r + d.len_r_mod_i - 1) * (n + 1) - d.type_r ||
            graded != 1) {
          log << " [AGL Hilbert fails for " << h.to_text() << " at n=" << n << "]";
          return false;
        }
      } else {
        if (value != d.e0 * (n + 1) - (d.e0 - d.len_r_mod_i) || graded != 0) {
          log << " [Gorenstein Hilbert fails for " << h.to_text() << " at n=" << n
              << "]";
          return false;
        }
      }
    }
  }
  log << " " << checked << " rings checked";
  return true;
}

// --- criterion 5 extras -------------------------------------------------------

bool three_generated_extras(std::ostringstream& log, Int f_max) {
  long mult4 = 0, mult4_two_agl = 0, family_matches = 0;
  bool ok = true;
  for_each_three_generated(f_max, [&](const NumericalSemigroup& h) {
    if (h.multiplicity() == 4) {
      ++mult4;
      if (!h.is_symmetric() && sally_rank(h) == 2) ++mult4_two_agl;
    }
    if (h.multiplicity() == 3 || h.multiplicity() == 5) {
      if (small_multiplicity_family(h).has_value()) ++family_matches;
    }
  });
  ok &= expect(log, mult4 > 0, "multiplicity-4 slice empty");
  ok &= expect(log, mult4_two_agl == 0, "multiplicity-4 slice has a 2-AGL member");
  ok &= expect(log, family_matches > 0, "no family matches at multiplicity 3/5");
  log << " mult4=" << mult4 << " familyMatches=" << family_matches;
  return ok;
}

// --- criterion 7: B-algebra ---------------------------------------------------

bool b_algebra_suite(std::ostringstream& log, int genus_max) {
  long two_agl_minmult = 0;
  for (const auto& h : enumerate_by_genus(genus_max)) {
    if (h.is_naturals() || !h.has_minimal_multiplicity()) continue;
    if (sally_rank(h) != 2) continue;
    ++two_agl_minmult;
    const auto b = b_algebra(h);
    if (b.is_naturals() || sally_rank(b) != 1) {
      log << " [B not AGL non-Gorenstein for " << h.to_text() << "]";
      return false;
    }
  }
  log << " " << two_agl_minmult << " 2-AGL minimal-multiplicity rings";
  return two_agl_minmult > 0;
}

// --- criterion 8: oracle equivalence -----------------------------------------

bool oracle_equivalence(std::ostringstream& log) {
  std::map<Int, long> per_genus;
  for (const auto& h : enumerate_by_genus(8)) ++per_genus[h.genus()];
  for (int g = 0; g <= 8; ++g) {
    if (per_genus[g] != oracles::gap_subset_count(g)) {
      log << " [genus " << g << " count " << per_genus[g] << " != oracle "
          << oracles::gap_subset_count(g) << "]";
      return false;
    }
  }

  // Canonical ideal: pseudo-Frobenius offsets against the gap dual, directly.
  long checked = 0;
  for (const auto& h : enumerate_by_genus(12)) {
    std::vector<Int> offsets;
    for (Int c : h.pseudo_frobenius()) offsets.push_back(h.frobenius() - c);
    const auto from_pf = RelativeIdeal::from_offsets(h, offsets);
    const auto k = canonical_ideal(h);  // asserts both constructions agree
    if (!(from_pf == k)) {
      log << " [canonical mismatch at " << h.to_text() << "]";
      return false;
    }
    for (Int z = -2; z < h.conductor() + 2; ++z) {
      if (k.contains(z) != !h.contains(h.frobenius() - z)) {
        log << " [gap dual mismatch at " << h.to_text() << "]";
        return false;
      }
    }
    ++checked;
  }
  log << " genus<=8 counts ok; " << checked << " canonical ideals cross-checked";
  return true;
}

}  // namespace

int main() {
  int failures = 0;
  const auto criterion = [&](int idx, const std::string& label,
                             const std::function<bool(std::ostringstream&)>& fn) {
    std::ostringstream log;
    bool ok = false;
    const auto start = std::chrono::steady_clock::now();
    try {
      ok = fn(log);
    } catch (const std::exception& e) {
      log << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << idx << ". " << label << " ("
              << secs << "s)" << log.str() << "\n"
              << std::flush;
    if (!ok) ++failures;
  };

  criterion(1, "reference vectors: <3,7,8>, <5,7,9,13>, <4,9,11,14>, <4,7,9,10>",
            reference_vectors);

  criterion(2, "rank-2 equivalences agree over genus <= 20", [](std::ostringstream& log) {
    SuiteOptions opt;
    return suite_clean(log, "thm14", opt);
  });

  criterion(3, "rank formulas and parameter invariance over genus <= 15",
            [](std::ostringstream& log) {
              SuiteOptions opt;
              return suite_clean(log, "thm23-invariance", opt);
            });

  criterion(4, "Hilbert functions: 2-AGL, AGL and Gorenstein shapes, genus <= 15",
            [](std::ostringstream& log) { return hilbert_suite(log, 15); });

  criterion(5, "three-generated sweep, f <= 200", [](std::ostringstream& log) {
    SuiteOptions opt;
    bool ok = suite_clean(log, "thm74", opt);
    ok &= suite_clean(log, "prop75", opt);
    ok &= suite_clean(log, "cor77", opt);
    ok &= three_generated_extras(log, 200);
    return ok;
  });

  criterion(6, "construction families: lifts, conductors, filtrations",
            [](std::ostringstream& log) {
              SuiteOptions opt;
              bool ok = suite_clean(log, "thm710", opt);
              ok &= suite_clean(log, "claims711-712", opt);
              return ok;
            });

  criterion(7, "B = m:m behaviour over genus <= 15", [](std::ostringstream& log) {
    SuiteOptions opt;
    bool ok = suite_clean(log, "thm62", opt);
    ok &= suite_clean(log, "finalthm", opt);
    ok &= b_algebra_suite(log, 15);
    return ok;
  });

  criterion(8, "enumeration and canonical-ideal oracles", oracle_equivalence);

  criterion(9, "supplementary invariant suites at default bounds",
            [](std::ostringstream& log) {
              SuiteOptions opt;
              bool ok = true;
              for (const std::string name : {"prop24", "cor25", "prop27", "prop36",
                                             "prop37", "thm72", "prop79", "prop41-42"})
                ok &= suite_clean(log, name, opt);
              return ok;
            });

  if (failures == 0) {
    std::cout << "ACCEPTANCE: all criteria passed\n";
    return 0;
  }
  std::cout << "ACCEPTANCE: " << failures << " criteria failed\n";
  return 1;
}
