#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsring/classify.hpp"
#include "nsring/constructs.hpp"
#include "nsring/corpus.hpp"
#include "nsring/render.hpp"

namespace {

using namespace nsring;

int cmd_analyze(const std::string& gens_text, bool as_json, int horizon) {
  const NumericalSemigroup h =
      NumericalSemigroup::from_generators(parse_generator_list(gens_text));
  const InvariantDossier d = compute_dossier(h, horizon);
  if (as_json)
    std::cout << dossier_to_json(d).dump() << "\n";
  else
    std::cout << dossier_to_text(d);
  return 0;
}

bool passes_filter(const NumericalSemigroup& h, const std::string& filter) {
  if (filter == "all") return true;
  if (filter == "minimal-multiplicity") return h.has_minimal_multiplicity();
  const Classification c = classification_of(h);
  if (filter == "gorenstein")
    return c == Classification::Gorenstein || c == Classification::DVR;
  if (filter == "agl") return c == Classification::AGL;
  if (filter == "2-agl") return c == Classification::TwoAGL;
  if (filter == "rank>=3" || filter == "rank≥3")
    return c == Classification::HigherRank;
  throw CLI::ValidationError("unknown filter: " + filter);
}

int cmd_enumerate(int genus_max, const std::string& filter, bool as_json) {
  for (const auto& h : enumerate_by_genus(genus_max)) {
    if (!passes_filter(h, filter)) continue;
    if (as_json) {
      const Int rank = h.is_naturals() ? 0 : sally_rank(h);
      json line{{"gens", h.minimal_generators()},
                {"f", h.frobenius()},
                {"genus", h.genus()},
                {"type", h.type()},
                {"class", classification_name(classification_of(h), rank)}};
      std::cout << line.dump() << "\n";
    } else {
      std::cout << h.to_text() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, bool as_json) {
  const VerificationReport rep = run_suite(suite, opt);
  if (as_json)
    std::cout << report_to_json_lines(rep);
  else
    std::cout << report_to_text(rep);
  return rep.ok() ? 0 : 1;
}

int cmd_construct(const std::string& family, const std::string& seed_text, Int e,
                  Int n, Int c, int horizon, bool as_json) {
  FamilyInstance inst = [&] {
    if (family == "thm710") {
      const NumericalSemigroup seed =
          NumericalSemigroup::from_generators(parse_generator_list(seed_text));
      return apery_lift_family(seed, e, n);
    }
    if (family == "cor73") return multiplicity_three_family(c);
    if (family == "ex5") return minimal_multiplicity_family(e, n);
    if (family == "ex2") return nonfree_family(e);
    throw CLI::ValidationError("unknown family: " + family);
  }();

  const auto checks = check_family_instance(inst, horizon);
  bool all_ok = true;
  for (const auto& chk : checks) all_ok = all_ok && chk.ok;

  if (as_json) {
    json j{{"family", inst.family},
           {"parameters", inst.parameters},
           {"gens", inst.semigroup.minimal_generators()},
           {"ok", all_ok}};
    json cj = json::array();
    for (const auto& chk : checks)
      cj.push_back({{"key", chk.key},
                    {"predicted", chk.expected},
                    {"observed", chk.observed},
                    {"ok", chk.ok}});
    j["checks"] = cj;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << inst.family << " -> " << inst.semigroup.to_text() << "\n";
    for (const auto& chk : checks) {
      std::cout << "  " << (chk.ok ? "ok   " : "FAIL ") << chk.key << ": predicted "
                << chk.expected.dump() << ", observed " << chk.observed.dump() << "\n";
    }
    std::cout << (all_ok ? "all predictions match" : "PREDICTION MISMATCH") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical semigroup ring classifier (Gorenstein / AGL / 2-AGL)"};
  app.require_subcommand(1);

  std::string gens_text, filter = "all", suite, family, seed_text = "2,3";
  bool as_json = false;
  int genus_max = 12, horizon = 6, workers = 0;
  Int fam_e = 3, fam_n = 2, fam_c = 4;
  Int f_max = -1;
  int verify_genus = -1;

  auto* analyze = app.add_subcommand("analyze", "full invariant dossier of one semigroup");
  analyze->add_option("gens", gens_text, "comma-separated generators, e.g. 3,7,8")
      ->required();
  analyze->add_flag("--json", as_json, "emit JSON");
  analyze->add_option("--horizon", horizon, "Hilbert horizon N (default 6)");

  auto* enumerate = app.add_subcommand("enumerate", "list semigroups by genus");
  enumerate->add_option("--genus-max", genus_max, "largest genus")->required();
  enumerate->add_option("--filter", filter,
                        "all|gorenstein|agl|2-agl|rank>=3|minimal-multiplicity");
  enumerate->add_flag("--json", as_json, "emit JSON lines");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name (see README)")->required();
  verify->add_option("--genus-max", verify_genus, "genus bound override");
  verify->add_option("--f-max", f_max, "Frobenius bound override (3-generated sweeps)");
  verify->add_option("--workers", workers, "worker threads (default: all cores)");
  verify->add_flag("--json", as_json, "emit JSON lines");

  auto* construct = app.add_subcommand("construct", "build a parametric family member");
  construct->add_option("family", family, "thm710|cor73|ex5|ex2")->required();
  construct->add_option("--seed", seed_text, "symmetric seed for thm710 (default 2,3)");
  construct->add_option("--e", fam_e, "family parameter e");
  construct->add_option("--n", fam_n, "family parameter n");
  construct->add_option("--c", fam_c, "family parameter c");
  construct->add_flag("--json", as_json, "emit JSON");
  construct->add_option("--horizon", horizon, "Hilbert horizon N (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(gens_text, as_json, horizon);
    if (app.got_subcommand(enumerate)) return cmd_enumerate(genus_max, filter, as_json);
    if (app.got_subcommand(verify)) {
      SuiteOptions opt;
      opt.genus_max = verify_genus;
      opt.f_max = f_max;
      opt.workers = workers;
      opt.horizon = horizon;
      return cmd_verify(suite, opt, as_json);
    }
    if (app.got_subcommand(construct))
      return cmd_construct(family, seed_text, fam_e, fam_n, fam_c, horizon, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
