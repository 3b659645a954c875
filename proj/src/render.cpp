#include "nsring/render.hpp"

#include <sstream>

#include "nsring/threegen.hpp"

namespace nsring {

json ideal_to_json(const RelativeIdeal& e) {
  return json{{"min", e.min_element()},
              {"stable_from", e.stable_from()},
              {"members", e.window_members()}};
}

json dossier_to_json(const InvariantDossier& d) {
  json j;
  j["gens"] = d.semigroup.minimal_generators();
  j["f"] = d.semigroup.frobenius();
  j["type"] = d.type_r;
  j["rank"] = d.sally_rank;
  j["class"] = classification_name(d.classification, d.sally_rank);
  j["red"] = d.reduction_number;
  j["e0"] = d.e0;
  j["e1"] = d.e1;
  j["lenRI"] = d.len_r_mod_i;
  j["hilbert"] = d.hilbert_values;
  j["sally"] = d.sally_lengths;
  if (d.decomposition) {
    j["decomp"] = {{"free", d.decomposition->free_rank},
                   {"socle", d.decomposition->socle_count}};
  } else {
    j["decomp"] = nullptr;
  }
  j["kr_free"] = d.kr_free;
  if (d.b_semigroup) {
    j["B"] = {{"gens", d.b_semigroup->minimal_generators()},
              {"class", classification_name(*d.b_classification, d.b_rank)}};
  } else {
    j["B"] = nullptr;
  }
  if (d.idealization) {
    j["idealization"] = {{"v", d.idealization->embdim},
                         {"e", d.idealization->mult},
                         {"rank", d.idealization->rank}};
  } else {
    j["idealization"] = nullptr;
  }
  j["thm14"] = d.rank_two_checks;
  return j;
}

std::string dossier_to_text(const InvariantDossier& d) {
  std::ostringstream out;
  out << d.semigroup.to_text() << "\n";

  std::string cls = classification_name(d.classification, d.sally_rank);
  if (d.classification == Classification::Gorenstein && d.semigroup.is_symmetric())
    cls = "Gorenstein (symmetric)";
  if (d.classification == Classification::DVR) cls = "Gorenstein (DVR)";
  out << "  classification : " << cls << "  (Sally rank " << d.sally_rank << ")\n";

  out << "  PF             : {";
  const auto& pf = d.semigroup.pseudo_frobenius();
  for (std::size_t i = 0; i < pf.size(); ++i) out << (i ? "," : "") << pf[i];
  out << "}   type " << d.type_r << "\n";

  out << "  K              : " << d.canonical_k.to_text() << "\n";
  out << "  parameter a    : " << d.chosen_a
      << "   reduction number " << d.reduction_number << "\n";
  out << "  blowup S       : " << d.blowup_s.to_text() << "\n";
  out << "  conductor      : " << d.conductor_c.to_text() << "\n";
  out << "  e0, e1, l(R/I) : " << d.e0 << ", " << d.e1 << ", " << d.len_r_mod_i << "\n";

  out << "  hilbert        : ";
  for (std::size_t i = 0; i < d.hilbert_values.size(); ++i)
    out << (i ? " " : "") << d.hilbert_values[i];
  out << "\n  sally lengths  : ";
  for (std::size_t i = 0; i < d.sally_lengths.size(); ++i)
    out << (i ? " " : "") << d.sally_lengths[i];
  out << "\n";

  out << "  l(K/R)=" << d.len_k_mod_r << "  l(K^2/K)=" << d.len_k2_mod_k << "\n";
  if (d.semigroup.embedding_dimension() == 3 && !d.semigroup.is_symmetric()) {
    out << "  presentation   : " << herzog_matrix(d.semigroup).to_text() << "\n";
  }
  if (d.decomposition) {
    out << "  K/R decomposition: (R/c)^" << d.decomposition->free_rank
        << " + (R/m)^" << d.decomposition->socle_count
        << (d.kr_free ? "   [free over R/c]" : "") << "\n";
  }
  if (d.b_semigroup) {
    out << "  B = m:m        : " << d.b_semigroup->to_text() << "  ["
        << classification_name(*d.b_classification, d.b_rank) << "]\n";
  }
  if (d.idealization) {
    out << "  idealization   : v=" << d.idealization->embdim
        << " e=" << d.idealization->mult << " rank=" << d.idealization->rank << "\n";
  }
  out << "  rank-2 checks  : [";
  for (std::size_t i = 0; i < d.rank_two_checks.size(); ++i)
    out << (i ? "," : "") << (d.rank_two_checks[i] ? "T" : "F");
  out << "]\n";
  return out.str();
}

}  // namespace nsring
