#include "nsring/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "nsring/errors.hpp"

namespace nsring {

std::string classification_name(Classification c, Int rank) {
  switch (c) {
    case Classification::DVR: return "DVR";
    case Classification::Gorenstein: return "Gorenstein";
    case Classification::AGL: return "AGL";
    case Classification::TwoAGL: return "2-AGL";
    case Classification::HigherRank: return "rank(" + std::to_string(rank) + ")";
  }
  return "?";
}

CanonicalContext canonical_context(const NumericalSemigroup& h,
                                   std::optional<Int> a_override) {
  RelativeIdeal unit = RelativeIdeal::unit_ideal(h);
  RelativeIdeal maxideal = RelativeIdeal::maximal_ideal(h);
  RelativeIdeal k = canonical_ideal(h);
  const bool gorenstein = (k == unit);

  Int a;
  if (a_override) {
    a = *a_override;
  } else if (gorenstein) {
    a = h.multiplicity();
  } else {
    a = h.conductor();
  }
  if (a <= 0 || !h.contains(a))
    throw std::invalid_argument("reduction parameter must be a nonzero member of H");

  RelativeIdeal i = translate(k, a);
  if (!is_subset(i, unit) || i == unit)
    throw std::invalid_argument("parameter does not give a proper canonical ideal");

  Blowup blow = stabilize(k);
  RelativeIdeal conductor = colon(unit, blow.ring_set);

  return CanonicalContext{h,
                          std::move(unit),
                          std::move(maxideal),
                          std::move(k),
                          std::move(i),
                          std::move(blow.ring_set),
                          std::move(conductor),
                          a,
                          blow.reduction_number,
                          gorenstein};
}

std::pair<Int, Int> hilbert_coefficients(const CanonicalContext& ctx) {
  const Int e0 = ctx.a;
  // Read e1 off len(R/I^{n+1}) = e0 (n+1) - e1, exact for n >= red; take
  // three consecutive stable points and insist they tell the same story.
  const Int start = ctx.reduction_number;
  RelativeIdeal in = power(ctx.I, start + 1);
  Int e1 = 0;
  for (Int n = start; n < start + 3; ++n) {
    const Int value = length_quotient(ctx.unit, in);
    const Int candidate = e0 * (n + 1) - value;
    if (n == start) {
      e1 = candidate;
    } else if (candidate != e1) {
      throw internal_error("Hilbert line is not stable past the reduction number");
    }
    in = sum(in, ctx.I);
  }
  const Int via_blowup = length_quotient(ctx.S, ctx.unit);
  if (e1 != via_blowup)
    throw internal_error("e1 from the Hilbert line differs from len(S/R)");
  return {e0, e1};
}

Int rank_of(const CanonicalContext& ctx) {
  const Int via_blowup = length_quotient(ctx.S, ctx.K);
  const Int via_conductor = length_quotient(ctx.unit, ctx.conductor);
  const auto [e0, e1] = hilbert_coefficients(ctx);
  const Int via_hilbert = e1 - (e0 - length_quotient(ctx.unit, ctx.I));
  if (via_blowup != via_conductor || via_blowup != via_hilbert)
    throw internal_error("Sally rank computations disagree for " + ctx.H.to_text());
  return via_blowup;
}

std::array<bool, 7> rank_two_equivalents(const CanonicalContext& ctx) {
  std::array<bool, 7> out{};
  const Int a = ctx.a;

  out[0] = (rank_of(ctx) == 2);

  // Graded pieces of the Sally module have length 2 up to the horizon, and
  // the module is not killed by m (the extension does not split).
  RelativeIdeal i2 = sum(ctx.I, ctx.I);
  {
    bool lengths_ok = true;
    RelativeIdeal in1 = i2;  // I^{n+1} for n = 1
    for (Int n = 1; n <= 6; ++n) {
      if (length_quotient(in1, translate(ctx.I, n * a)) != 2) {
        lengths_ok = false;
        break;
      }
      in1 = sum(in1, ctx.I);
    }
    bool witness = false;
    if (lengths_ok) {
      const RelativeIdeal mixed =
          unite(sum(ctx.maxideal, i2), translate(ctx.I, a));
      witness = (length_quotient(i2, mixed) == 1);
    }
    out[1] = lengths_ok && witness;
  }

  {
    const RelativeIdeal k2 = sum(ctx.K, ctx.K);
    const RelativeIdeal k3 = sum(k2, ctx.K);
    out[2] = (k2 == k3) && length_quotient(k2, ctx.K) == 2;
  }

  {
    const RelativeIdeal i3 = sum(i2, ctx.I);
    out[3] = (i3 == translate(i2, a)) &&
             length_quotient(i2, translate(ctx.I, a)) == 2;
  }

  {
    const RelativeIdeal km = colon(ctx.K, ctx.maxideal);
    out[4] = !ctx.gorenstein && is_subset(km, ctx.S) &&
             length_quotient(ctx.S, km) == 1;
  }

  out[5] = (length_quotient(ctx.S, ctx.K) == 2);
  out[6] = (length_quotient(ctx.unit, ctx.conductor) == 2);
  return out;
}

Int choose_canonical_parameter(const NumericalSemigroup& h) {
  if (h.is_naturals())
    throw std::invalid_argument("no canonical parameter for the DVR");
  const RelativeIdeal k = canonical_ideal(h);
  if (k == RelativeIdeal::unit_ideal(h)) return h.multiplicity();
  return h.conductor();
}

Int sally_rank(const NumericalSemigroup& h) { return rank_of(canonical_context(h)); }

Int hilbert_function(const NumericalSemigroup& h, Int a, Int n) {
  if (n < 0) throw std::invalid_argument("negative Hilbert index");
  const CanonicalContext ctx = canonical_context(h, a);
  return length_quotient(ctx.unit, power(ctx.I, n + 1));
}

std::pair<Int, Int> hilbert_coefficients(const NumericalSemigroup& h, Int a) {
  return hilbert_coefficients(canonical_context(h, a));
}

Int sally_graded_length(const NumericalSemigroup& h, Int a, Int n) {
  if (n < 1) throw std::invalid_argument("graded Sally length needs n >= 1");
  const CanonicalContext ctx = canonical_context(h, a);
  return length_quotient(power(ctx.I, n + 1), translate(ctx.I, n * a));
}

std::array<bool, 7> rank_two_equivalents(const NumericalSemigroup& h) {
  return rank_two_equivalents(canonical_context(h));
}

bool is_almost_gorenstein(const NumericalSemigroup& h) {
  const RelativeIdeal unit = RelativeIdeal::unit_ideal(h);
  const RelativeIdeal m = RelativeIdeal::maximal_ideal(h);
  const RelativeIdeal k = canonical_ideal(h);
  const bool via_ring = is_subset(sum(m, k), unit);
  const bool via_square = is_subset(sum(m, sum(k, k)), k);
  if (via_ring != via_square)
    throw internal_error("the two almost-Gorenstein tests disagree for " + h.to_text());
  return via_ring;
}

KrDecomposition kr_decomposition(const NumericalSemigroup& h) {
  const CanonicalContext ctx = canonical_context(h);
  if (rank_of(ctx) != 2)
    throw std::invalid_argument("kr_decomposition requires a 2-AGL semigroup");
  const Int len_kr = length_quotient(ctx.K, ctx.unit);
  const Int r = h.type();
  KrDecomposition d;
  d.free_rank = len_kr - (r - 1);
  d.socle_count = 2 * (r - 1) - len_kr;
  if (d.free_rank < 1 || d.socle_count < 0)
    throw internal_error("K/R decomposition out of range for " + h.to_text());
  return d;
}

bool canonical_free_over_conductor(const NumericalSemigroup& h) {
  const CanonicalContext ctx = canonical_context(h);
  if (rank_of(ctx) != 2)
    throw std::invalid_argument("freeness test requires a 2-AGL semigroup");
  const Int len_kr = length_quotient(ctx.K, ctx.unit);
  const Int r = h.type();
  const bool via_length = (len_kr == 2 * (r - 1));

  const auto& pf = h.pseudo_frobenius();
  const Int f = h.frobenius();
  bool via_pairing = false;
  for (Int g : h.minimal_generators()) {
    bool all = true;
    for (Int i = 1; i <= r - 1; ++i) {
      if (f + g != pf[static_cast<std::size_t>(i - 1)] +
                       pf[static_cast<std::size_t>(r - 1 - i)]) {
        all = false;
        break;
      }
    }
    if (all) {
      via_pairing = true;
      break;
    }
  }
  if (via_length != via_pairing)
    throw internal_error("freeness criteria disagree for " + h.to_text());
  return via_length;
}

NumericalSemigroup b_algebra(const NumericalSemigroup& h) {
  if (h.is_naturals())
    throw std::invalid_argument("m : m is undefined for the DVR");
  const RelativeIdeal m = RelativeIdeal::maximal_ideal(h);
  return semigroup_from_ideal(colon(m, m));
}

IdealizationPreview idealization_preview(const NumericalSemigroup& h) {
  if (h.is_naturals())
    throw std::invalid_argument("idealization preview is undefined for the DVR");
  const CanonicalContext ctx = canonical_context(h);
  IdealizationPreview p;
  p.embdim = h.embedding_dimension() +
             static_cast<Int>(minimal_module_generators(ctx.conductor).size());
  p.mult = 2 * h.multiplicity();
  p.rank = rank_of(ctx);
  return p;
}

Classification classification_of(const NumericalSemigroup& h) {
  if (h.is_naturals()) return Classification::DVR;
  const Int rank = sally_rank(h);
  if (rank == 0) return Classification::Gorenstein;
  if (rank == 1) return Classification::AGL;
  if (rank == 2) return Classification::TwoAGL;
  return Classification::HigherRank;
}

InvariantDossier compute_dossier(const NumericalSemigroup& h, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  CanonicalContext ctx = canonical_context(h);
  const Int rank = rank_of(ctx);
  const auto [e0, e1] = hilbert_coefficients(ctx);

  InvariantDossier d(h, ctx.K, ctx.a, ctx.reduction_number, ctx.S, ctx.conductor);
  d.sally_rank = rank;
  d.type_r = h.type();
  d.e0 = e0;
  d.e1 = e1;
  d.len_r_mod_i = length_quotient(ctx.unit, ctx.I);

  if (h.is_naturals()) {
    d.classification = Classification::DVR;
  } else if (rank == 0) {
    d.classification = Classification::Gorenstein;
  } else if (rank == 1) {
    d.classification = Classification::AGL;
  } else if (rank == 2) {
    d.classification = Classification::TwoAGL;
  } else {
    d.classification = Classification::HigherRank;
  }

  RelativeIdeal in1 = ctx.I;  // I^{n+1} for n = 0
  d.hilbert_values.push_back(length_quotient(ctx.unit, in1));
  for (int n = 1; n <= horizon; ++n) {
    in1 = sum(in1, ctx.I);
    d.hilbert_values.push_back(length_quotient(ctx.unit, in1));
    d.sally_lengths.push_back(
        length_quotient(in1, translate(ctx.I, static_cast<Int>(n) * ctx.a)));
  }

  d.len_k_mod_r = length_quotient(ctx.K, ctx.unit);
  const RelativeIdeal k2 = sum(ctx.K, ctx.K);
  d.len_k2_mod_k = length_quotient(k2, ctx.K);

  if (rank == 2) {
    KrDecomposition kd;
    kd.free_rank = d.len_k_mod_r - (d.type_r - 1);
    kd.socle_count = 2 * (d.type_r - 1) - d.len_k_mod_r;
    if (kd.free_rank < 1 || kd.socle_count < 0)
      throw internal_error("K/R decomposition out of range for " + h.to_text());
    d.decomposition = kd;
    d.kr_free = canonical_free_over_conductor(h);
  }

  if (!h.is_naturals()) {
    NumericalSemigroup b = b_algebra(h);
    if (b.is_naturals()) {
      d.b_rank = 0;
      d.b_classification = Classification::DVR;
    } else {
      d.b_rank = sally_rank(b);
      d.b_classification = d.b_rank == 0   ? Classification::Gorenstein
                           : d.b_rank == 1 ? Classification::AGL
                           : d.b_rank == 2 ? Classification::TwoAGL
                                           : Classification::HigherRank;
    }
    d.b_semigroup = std::move(b);
    d.idealization = idealization_preview(h);
  }

  d.rank_two_checks = rank_two_equivalents(ctx);
  return d;
}

}  // namespace nsring
