#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/relideal.hpp"

namespace nsring {

enum class Classification { DVR, Gorenstein, AGL, TwoAGL, HigherRank };

// "DVR", "Gorenstein", "AGL", "2-AGL", "rank(3)", ...
std::string classification_name(Classification c, Int rank);

struct KrDecomposition {
  Int free_rank = 0;    // copies of R/c in K/R
  Int socle_count = 0;  // copies of R/m in K/R
};

struct IdealizationPreview {
  Int embdim = 0;  // v(A) = v(R) + mu_R(c)
  Int mult = 0;    // e(A) = 2 e(R)
  Int rank = 0;    // Sally rank of A = Sally rank of R
};

// Everything the classification ops need about one ring, computed once:
// the canonical ideal K, a reduction parameter a with I = a + K, the blowup
// S with its reduction number, and the conductor R : S.
struct CanonicalContext {
  NumericalSemigroup H;
  RelativeIdeal unit;
  RelativeIdeal maxideal;
  RelativeIdeal K;
  RelativeIdeal I;
  RelativeIdeal S;
  RelativeIdeal conductor;
  Int a = 0;
  Int reduction_number = 0;
  bool gorenstein = false;  // K = R
};

// Builds the context. The default parameter is the conductor c(H) (the
// multiplicity when K = R, so that I is a proper ideal); an override must be
// a member yielding a proper monomial canonical ideal a + K inside H.
CanonicalContext canonical_context(const NumericalSemigroup& h,
                                   std::optional<Int> a_override = std::nullopt);

// Sally module rank, computed three independent ways (length of S/K, length
// of R/c, and e1 - (e0 - len(R/I))) which must agree.
Int rank_of(const CanonicalContext& ctx);

// (e0, e1): e0 is the parameter a; e1 is read off the stabilized Hilbert
// line at three points and must equal len(S/R).
std::pair<Int, Int> hilbert_coefficients(const CanonicalContext& ctx);

// The seven equivalent characterizations of Sally rank 2, each evaluated
// independently. On any semigroup the seven answers must agree.
std::array<bool, 7> rank_two_equivalents(const CanonicalContext& ctx);

struct InvariantDossier {
  InvariantDossier(NumericalSemigroup h, RelativeIdeal k, Int a, Int red,
                   RelativeIdeal s, RelativeIdeal c)
      : semigroup(std::move(h)),
        canonical_k(std::move(k)),
        chosen_a(a),
        reduction_number(red),
        blowup_s(std::move(s)),
        conductor_c(std::move(c)) {}

  NumericalSemigroup semigroup;
  RelativeIdeal canonical_k;
  Int chosen_a = 0;
  Int reduction_number = 0;
  RelativeIdeal blowup_s;
  RelativeIdeal conductor_c;
  Int sally_rank = 0;
  Int type_r = 0;
  Classification classification = Classification::Gorenstein;
  Int e0 = 0, e1 = 0, len_r_mod_i = 0;
  std::vector<Int> hilbert_values;  // len(R/I^{n+1}) for n = 0..horizon
  std::vector<Int> sally_lengths;   // len(I^{n+1}/Q^n I) for n = 1..horizon
  Int len_k_mod_r = 0, len_k2_mod_k = 0;
  std::optional<KrDecomposition> decomposition;  // set when 2-AGL
  bool kr_free = false;                          // meaningful when 2-AGL
  std::optional<NumericalSemigroup> b_semigroup;  // absent for the DVR
  std::optional<Classification> b_classification;
  Int b_rank = 0;
  std::array<bool, 7> rank_two_checks{};
  std::optional<IdealizationPreview> idealization;  // absent for the DVR
};

// Operations on a bare semigroup ---------------------------------------------

// c(H) in general, the multiplicity when K = R. Errors on H = N.
Int choose_canonical_parameter(const NumericalSemigroup& h);

Int sally_rank(const NumericalSemigroup& h);

// len(R/I^{n+1}) for I = a + K.
Int hilbert_function(const NumericalSemigroup& h, Int a, Int n);

std::pair<Int, Int> hilbert_coefficients(const NumericalSemigroup& h, Int a);

// len(I^{n+1} / (n a + I)), n >= 1.
Int sally_graded_length(const NumericalSemigroup& h, Int a, Int n);

std::array<bool, 7> rank_two_equivalents(const NumericalSemigroup& h);

// mK ⊆ R, cross-checked against mK² ⊆ K.
bool is_almost_gorenstein(const NumericalSemigroup& h);

// The (R/c)-module decomposition of K/R; requires a 2-AGL host.
KrDecomposition kr_decomposition(const NumericalSemigroup& h);

// Whether K/R is free over R/c (2-AGL hosts), decided by the length
// criterion and cross-checked against the pseudo-Frobenius pairing test.
bool canonical_free_over_conductor(const NumericalSemigroup& h);

// B = m : m as a numerical semigroup. Errors on H = N.
NumericalSemigroup b_algebra(const NumericalSemigroup& h);

// Predicted invariants of the idealization of the conductor. Errors on H = N.
IdealizationPreview idealization_preview(const NumericalSemigroup& h);

Classification classification_of(const NumericalSemigroup& h);

InvariantDossier compute_dossier(const NumericalSemigroup& h, int horizon = 6);

}  // namespace nsring
