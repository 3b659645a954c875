#pragma once

#include <array>
#include <optional>
#include <string>

#include "nsring/semigroup.hpp"

namespace nsring {

// Exponent data of the 2x3 matrix whose 2x2 minors present the semigroup
// ring of a non-symmetric 3-generated H, together with the graded degrees of
// its minimal free resolution.
struct HerzogData {
  std::array<Int, 3> ordered_gens{};  // (a1, a2, a3), resolution-ordered
  Int alpha = 0, beta = 0, gamma = 0;
  Int alpha_p = 0, beta_p = 0, gamma_p = 0;
  Int d1 = 0, d2 = 0, d3 = 0;  // degrees of the three minors
  Int m_deg = 0, n_deg = 0;    // top resolution degrees, m_deg < n_deg
  Int total_deg = 0;           // a1 + a2 + a3
  Int a_gap = 0;               // n_deg - m_deg; K = R + R t^{a_gap}

  // "I2[X^2 Y Z / Y^1 Z^1 X^3]"
  std::string to_text() const;
};

// Computes the presentation by brute-force minimal multiples and unique
// positive decompositions, trying all generator orders and returning the
// lexicographically smallest one with m_deg < n_deg. Requires exactly three
// minimal generators and a non-symmetric H.
HerzogData herzog_matrix(const NumericalSemigroup& h);

// All generator orders with m_deg < n_deg, lexicographically by ordered_gens.
std::vector<HerzogData> herzog_normal_forms(const NumericalSemigroup& h);

struct MatrixVerdict {
  bool two_agl = false;
  std::optional<Int> predicted_frobenius;  // set when two_agl
};

// Decides 2-AGL from the matrix normal form (top row exponents (2,1,1),
// bottom-left exponent >= 2) and predicts the Frobenius number; the verdict
// is cross-checked against the direct rank computation.
MatrixVerdict two_agl_from_presentation(const NumericalSemigroup& h);

struct FamilyMatch {
  std::string family;  // e.g. "<3,c+3,2c>"
  Int parameter = 0;
};

// Matches 3-generated H of multiplicity 3 or 5 against the parametric 2-AGL
// families; multiplicity 4 never matches. The match is cross-checked against
// the direct classification.
std::optional<FamilyMatch> small_multiplicity_family(const NumericalSemigroup& h);

// For type-2 H with at least three generators and K = R + R t^a: evaluates
// "3a in H and f = 2a + a_i for some generator". Returns nullopt when the
// hypotheses do not apply; otherwise the value, cross-checked against the
// direct classification.
std::optional<bool> type_two_shift_criterion(const NumericalSemigroup& h);

}  // namespace nsring
