#include "nsring/threegen.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nsring/classify.hpp"
#include "nsring/errors.hpp"

namespace nsring {

namespace {

// Least k >= 1 with k*a representable as lam*b + mu*c, lam, mu >= 0.
Int minimal_multiple(Int a, Int b, Int c) {
  for (Int k = 1; k <= b * c; ++k) {
    const Int target = k * a;
    for (Int lam = 0; lam * b <= target; ++lam) {
      if ((target - lam * b) % c == 0) return k;
    }
  }
  throw internal_error("no multiple found; generators do not interact");
}

// The unique (lam, mu) with lam, mu >= 1 and lam*b + mu*c = value; nullopt
// when no such pair or more than one exists.
std::optional<std::pair<Int, Int>> positive_decomposition(Int value, Int b, Int c) {
  std::optional<std::pair<Int, Int>> found;
  for (Int lam = 1; lam * b + c <= value; ++lam) {
    const Int rest = value - lam * b;
    if (rest % c != 0) continue;
    const Int mu = rest / c;
    if (mu < 1) continue;
    if (found) return std::nullopt;
    found = {lam, mu};
  }
  return found;
}

// Builds the exponent data for one ordering of the generators, without the
// m_deg < n_deg constraint. Throws std::invalid_argument when a minimal
// multiple fails to decompose uniquely with positive coefficients (the
// symmetric / degenerate case).
HerzogData build_for_order(Int a1, Int a2, Int a3) {
  const Int c1 = minimal_multiple(a1, a2, a3);
  const Int c2 = minimal_multiple(a2, a1, a3);
  const Int c3 = minimal_multiple(a3, a1, a2);

  const auto d1 = positive_decomposition(c1 * a1, a2, a3);  // (beta', gamma)
  const auto d2 = positive_decomposition(c2 * a2, a1, a3);  // (alpha, gamma')
  const auto d3 = positive_decomposition(c3 * a3, a1, a2);  // (alpha', beta)
  if (!d1 || !d2 || !d3)
    throw std::invalid_argument(
        "no unique positive decomposition; H is symmetric or degenerate");

  HerzogData h;
  h.ordered_gens = {a1, a2, a3};
  h.beta_p = d1->first;
  h.gamma = d1->second;
  h.alpha = d2->first;
  h.gamma_p = d2->second;
  h.alpha_p = d3->first;
  h.beta = d3->second;

  if (h.alpha + h.alpha_p != c1 || h.beta + h.beta_p != c2 ||
      h.gamma + h.gamma_p != c3)
    throw internal_error("matrix exponents do not split the minimal multiples");

  h.d1 = a3 * (h.gamma + h.gamma_p);
  h.d2 = a1 * (h.alpha + h.alpha_p);
  h.d3 = a2 * (h.beta + h.beta_p);
  h.total_deg = a1 + a2 + a3;

  h.m_deg = a1 * h.alpha + h.d1;
  if (h.m_deg != a2 * h.beta + h.d2 || h.m_deg != a3 * h.gamma + h.d3)
    throw internal_error("row-one degree identities fail");
  h.n_deg = a1 * h.alpha_p + h.d3;
  if (h.n_deg != a2 * h.beta_p + h.d1 || h.n_deg != a3 * h.gamma_p + h.d2)
    throw internal_error("row-two degree identities fail");

  const Int gap = h.n_deg - h.m_deg;
  if (gap != a2 * h.beta_p - a1 * h.alpha || gap != a3 * h.gamma_p - a2 * h.beta ||
      gap != a1 * h.alpha_p - a3 * h.gamma)
    throw internal_error("degree-difference identities fail");
  h.a_gap = gap;
  return h;
}

void require_three_generated_nonsymmetric(const NumericalSemigroup& h) {
  if (h.embedding_dimension() != 3)
    throw std::invalid_argument("needs exactly three minimal generators");
  if (h.is_symmetric())
    throw std::invalid_argument(
        "symmetric 3-generated H is a complete intersection; no matrix presentation");
}

std::vector<std::array<Int, 3>> generator_orders(const NumericalSemigroup& h) {
  std::array<Int, 3> g{h.minimal_generators()[0], h.minimal_generators()[1],
                       h.minimal_generators()[2]};
  std::vector<std::array<Int, 3>> orders;
  std::sort(g.begin(), g.end());
  do {
    orders.push_back(g);
  } while (std::next_permutation(g.begin(), g.end()));
  return orders;
}

}  // namespace

std::string HerzogData::to_text() const {
  std::ostringstream out;
  out << "I2[X^" << alpha << " Y^" << beta << " Z^" << gamma << " / Y^" << beta_p
      << " Z^" << gamma_p << " X^" << alpha_p << "]";
  return out.str();
}

std::vector<HerzogData> herzog_normal_forms(const NumericalSemigroup& h) {
  require_three_generated_nonsymmetric(h);
  std::vector<HerzogData> out;
  for (const auto& order : generator_orders(h)) {
    HerzogData cand = build_for_order(order[0], order[1], order[2]);
    if (cand.m_deg < cand.n_deg) out.push_back(std::move(cand));
  }
  return out;
}

HerzogData herzog_matrix(const NumericalSemigroup& h) {
  const auto forms = herzog_normal_forms(h);
  if (forms.empty()) throw internal_error("no ordering gives m < n for " + h.to_text());
  const HerzogData& best = forms.front();

  // The resolution degrees must reproduce the pseudo-Frobenius numbers.
  const std::vector<Int> pf_from_degrees{best.m_deg - best.total_deg,
                                         best.n_deg - best.total_deg};
  if (pf_from_degrees != h.pseudo_frobenius())
    throw internal_error("resolution degrees disagree with PF for " + h.to_text());
  return best;
}

MatrixVerdict two_agl_from_presentation(const NumericalSemigroup& h) {
  require_three_generated_nonsymmetric(h);

  std::optional<bool> verdict;
  std::optional<Int> predicted_f;
  for (const auto& order : generator_orders(h)) {
    HerzogData cand = build_for_order(order[0], order[1], order[2]);
    if (cand.m_deg >= cand.n_deg) continue;
    if (cand.alpha != 2 || cand.beta != 1 || cand.gamma != 1) continue;
    const bool two_agl = (cand.alpha_p >= 2);
    if (verdict && *verdict != two_agl)
      throw internal_error("matrix normal forms disagree for " + h.to_text());
    verdict = two_agl;
    if (two_agl) {
      const Int f = 2 * cand.a_gap + cand.ordered_gens[0];
      if (predicted_f && *predicted_f != f)
        throw internal_error("normal forms predict different Frobenius numbers");
      predicted_f = f;
    }
  }

  MatrixVerdict out;
  out.two_agl = verdict.value_or(false);
  if (out.two_agl) out.predicted_frobenius = predicted_f;

  const bool direct = (sally_rank(h) == 2);
  if (out.two_agl != direct)
    throw internal_error("matrix verdict disagrees with the rank for " + h.to_text());
  if (out.predicted_frobenius && *out.predicted_frobenius != h.frobenius())
    throw internal_error("matrix Frobenius prediction is wrong for " + h.to_text());
  return out;
}

std::optional<FamilyMatch> small_multiplicity_family(const NumericalSemigroup& h) {
  if (h.embedding_dimension() != 3)
    throw std::invalid_argument("needs exactly three minimal generators");
  const auto& g = h.minimal_generators();
  const Int e = h.multiplicity();

  std::optional<FamilyMatch> match;
  if (e == 3) {
    // <3, c+3, 2c> with c >= 4, c not divisible by 3.
    const Int x = g[1], y = g[2];
    for (const auto& [p, q] : {std::pair<Int, Int>{x, y}, {y, x}}) {
      const Int c = p - 3;
      if (c >= 4 && c % 3 != 0 && q == 2 * c) {
        match = FamilyMatch{"<3,c+3,2c>", c};
        break;
      }
    }
  } else if (e == 5) {
    const Int x = g[1], y = g[2];
    for (const auto& [p, q] : {std::pair<Int, Int>{x, y}, {y, x}}) {
      // <5, 3c+8, 2c+2>, c >= 2, c != 4 mod 5
      if ((p - 8) % 3 == 0) {
        const Int c = (p - 8) / 3;
        if (c >= 2 && c % 5 != 4 && q == 2 * c + 2) {
          match = FamilyMatch{"<5,3c+8,2c+2>", c};
          break;
        }
      }
      // <5, c+4, 3c+2>, c >= 2, c != 1 mod 5
      const Int c = p - 4;
      if (c >= 2 && c % 5 != 1 && q == 3 * c + 2) {
        match = FamilyMatch{"<5,c+4,3c+2>", c};
        break;
      }
    }
  }

  if (e == 3 || e == 4 || e == 5) {
    const bool direct = (sally_rank(h) == 2);
    if (match.has_value() != direct)
      throw internal_error("family match disagrees with the rank for " + h.to_text());
  }
  return match;
}

std::optional<bool> type_two_shift_criterion(const NumericalSemigroup& h) {
  if (h.is_naturals()) return std::nullopt;
  if (h.embedding_dimension() < 3 || h.type() != 2) return std::nullopt;

  const auto& pf = h.pseudo_frobenius();
  const Int f = h.frobenius();
  const Int a = f - pf.front();

  bool value = h.contains(3 * a);
  if (value) {
    bool hit = false;
    for (Int g : h.minimal_generators()) {
      if (f == 2 * a + g) {
        hit = true;
        break;
      }
    }
    value = hit;
  }

  const bool direct = (sally_rank(h) == 2);
  if (value != direct)
    throw internal_error("shift criterion disagrees with the rank for " + h.to_text());
  return value;
}

}  // namespace nsring
