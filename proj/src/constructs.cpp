#include "nsring/constructs.hpp"

#include <stdexcept>

#include "nsring/classify.hpp"
#include "nsring/errors.hpp"
#include "nsring/render.hpp"

namespace nsring {

namespace {

std::string rank_class_name(Int rank, const NumericalSemigroup& h) {
  if (h.is_naturals()) return "DVR";
  if (rank == 0) return "Gorenstein";
  if (rank == 1) return "AGL";
  if (rank == 2) return "2-AGL";
  return "rank(" + std::to_string(rank) + ")";
}

}  // namespace

FamilyInstance apery_lift_family(const NumericalSemigroup& seed, Int e, Int n) {
  if (!seed.is_symmetric())
    throw std::invalid_argument("apery lift needs a symmetric seed");
  if (e <= 0 || !seed.contains(e))
    throw std::invalid_argument("lift step must be a nonzero member of the seed");
  if (e < 3)
    throw std::invalid_argument(
        "lift step must be at least 3; smaller steps give a symmetric lift with no content");
  if (n < 0) throw std::invalid_argument("lift count must be non-negative");

  const std::vector<Int> ap = seed.apery_set(e);  // h_0 = 0 < h_1 < ... < h_{e-1}
  for (std::size_t i = 0; i < ap.size(); ++i) {
    if (ap[i] + ap[ap.size() - 1 - i] != ap.back())
      throw internal_error("Apery set of a symmetric seed is not self-paired");
  }

  std::vector<Int> gens{e};
  for (std::size_t i = 1; i < ap.size(); ++i) gens.push_back(ap[i] + n * e);
  NumericalSemigroup h = NumericalSemigroup::from_generators(gens);

  FamilyInstance inst{"thm710", {{"e", e}, {"n", n}}, seed, h, {}};
  json& p = inst.predicted;
  p["K2_eq_K3"] = true;
  p["len_K2_mod_K"] = n;
  p["rank"] = n;
  p["class"] = (n == 0) ? rank_class_name(0, h) : rank_class_name(n, h);
  p["blowup_gens"] = seed.minimal_generators();
  if (n >= 1) {
    p["multiplicity"] = e;
    p["embdim"] = e;
    p["minimal_multiplicity"] = true;
    p["type"] = e - 1;
    std::vector<Int> pf;
    for (std::size_t i = 1; i < ap.size(); ++i) pf.push_back(ap[i] + (n - 1) * e);
    p["PF"] = pf;
    std::vector<Int> cond_offsets;
    for (Int hi : ap) cond_offsets.push_back(hi + n * e);
    p["conductor"] = ideal_to_json(RelativeIdeal::from_offsets(h, cond_offsets));
    p["len_R_mod_c"] = n;
    p["mu_K_mod_R"] = e - 2;
    p["len_K_mod_R"] = n * (e - 2);
    p["filtration_lengths"] = std::vector<Int>(static_cast<std::size_t>(n), e - 2);
    p["filtration_ends_at_unit"] = true;
  }
  if (n == 2) {
    p["kr_free"] = true;
    p["decomp_free"] = e - 2;
    p["decomp_socle"] = 0;
  }
  return inst;
}

FamilyInstance multiplicity_three_family(Int c) {
  if (c < 4 || c % 3 == 0)
    throw std::invalid_argument("needs c >= 4 with c not divisible by 3");
  NumericalSemigroup h = NumericalSemigroup::from_generators({3, c + 3, 2 * c});

  FamilyInstance inst{"cor73", {{"c", c}}, std::nullopt, h, {}};
  json& p = inst.predicted;
  p["class"] = "2-AGL";
  p["rank"] = 2;
  p["type"] = 2;
  p["K2_eq_K3"] = true;
  p["len_K_mod_R"] = 2;
  p["kr_free"] = true;
  p["decomp_free"] = 1;
  p["decomp_socle"] = 0;
  return inst;
}

FamilyInstance minimal_multiplicity_family(Int e, Int n) {
  if (e < 3 || n < 2) throw std::invalid_argument("needs e >= 3 and n >= 2");
  std::vector<Int> gens{e};
  for (Int i = 1; i <= e - 2; ++i) gens.push_back(e * n + i);
  gens.push_back(2 * e * n - (e + 1));
  NumericalSemigroup h = NumericalSemigroup::from_generators(gens);

  FamilyInstance inst{"ex5", {{"e", e}, {"n", n}}, std::nullopt, h, {}};
  json& p = inst.predicted;
  p["class"] = "2-AGL";
  p["rank"] = 2;
  p["type"] = e - 1;
  p["multiplicity"] = e;
  p["minimal_multiplicity"] = true;
  p["K2_eq_K3"] = true;
  p["len_K_mod_R"] = 2 * (e - 2);
  p["mu_K_mod_R"] = e - 2;
  p["kr_free"] = true;
  p["decomp_free"] = e - 2;
  p["decomp_socle"] = 0;
  return inst;
}

FamilyInstance nonfree_family(Int e) {
  if (e < 4) throw std::invalid_argument("needs e >= 4");
  std::vector<Int> gens{e};
  for (Int i = 3; i <= e - 1; ++i) gens.push_back(e + i);
  gens.push_back(2 * e + 1);
  gens.push_back(2 * e + 2);
  NumericalSemigroup h = NumericalSemigroup::from_generators(gens);

  FamilyInstance inst{"ex2", {{"e", e}}, std::nullopt, h, {}};
  json& p = inst.predicted;
  p["class"] = "2-AGL";
  p["rank"] = 2;
  p["type"] = e - 1;
  p["multiplicity"] = e;
  p["minimal_multiplicity"] = true;
  p["K2_eq_K3"] = true;
  p["len_K_mod_R"] = e - 1;
  p["kr_free"] = false;
  p["decomp_free"] = 1;
  p["decomp_socle"] = e - 3;
  p["B_gens"] = std::vector<Int>{3, 4, 5};
  return inst;
}

std::vector<PredictionCheck> check_family_instance(const FamilyInstance& inst,
                                                   int horizon) {
  const NumericalSemigroup& h = inst.semigroup;
  const InvariantDossier d = compute_dossier(h, horizon);
  const CanonicalContext ctx = canonical_context(h);

  auto observed_for = [&](const std::string& key) -> json {
    if (key == "class") return classification_name(d.classification, d.sally_rank);
    if (key == "rank") return d.sally_rank;
    if (key == "type") return d.type_r;
    if (key == "multiplicity") return h.multiplicity();
    if (key == "embdim") return h.embedding_dimension();
    if (key == "minimal_multiplicity") return h.has_minimal_multiplicity();
    if (key == "K2_eq_K3") {
      const RelativeIdeal k2 = sum(ctx.K, ctx.K);
      return k2 == sum(k2, ctx.K);
    }
    if (key == "len_K2_mod_K") return d.len_k2_mod_k;
    if (key == "len_K_mod_R") return d.len_k_mod_r;
    if (key == "mu_K_mod_R")
      return static_cast<Int>(quotient_module_generators(ctx.K, ctx.unit).size());
    if (key == "len_R_mod_c") return length_quotient(ctx.unit, ctx.conductor);
    if (key == "PF") return h.pseudo_frobenius();
    if (key == "conductor") return ideal_to_json(ctx.conductor);
    if (key == "blowup_gens")
      return semigroup_from_ideal(ctx.S).minimal_generators();
    if (key == "filtration_lengths") {
      // L_q = m^q K + R, descending from K to R.
      const Int n = inst.parameters.at("n");
      std::vector<Int> lengths;
      RelativeIdeal lq = ctx.K;
      for (Int q = 0; q < n; ++q) {
        RelativeIdeal lq1 = unite(sum(ctx.maxideal, lq), ctx.unit);
        lengths.push_back(length_quotient(lq, lq1));
        lq = std::move(lq1);
      }
      return lengths;
    }
    if (key == "filtration_ends_at_unit") {
      const Int n = inst.parameters.at("n");
      RelativeIdeal lq = ctx.K;
      for (Int q = 0; q < n; ++q) lq = unite(sum(ctx.maxideal, lq), ctx.unit);
      return lq == ctx.unit;
    }
    if (key == "kr_free") return d.kr_free;
    if (key == "decomp_free")
      return d.decomposition ? json(d.decomposition->free_rank) : json(nullptr);
    if (key == "decomp_socle")
      return d.decomposition ? json(d.decomposition->socle_count) : json(nullptr);
    if (key == "B_gens")
      return d.b_semigroup ? json(d.b_semigroup->minimal_generators()) : json(nullptr);
    throw internal_error("unknown prediction key: " + key);
  };

  std::vector<PredictionCheck> out;
  for (auto it = inst.predicted.begin(); it != inst.predicted.end(); ++it) {
    PredictionCheck chk;
    chk.key = it.key();
    chk.expected = it.value();
    chk.observed = observed_for(it.key());
    chk.ok = (chk.expected == chk.observed);
    out.push_back(std::move(chk));
  }
  return out;
}

}  // namespace nsring
