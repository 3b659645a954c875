#pragma once

#include <string>

#include "json.hpp"
#include "nsring/classify.hpp"
#include "nsring/relideal.hpp"

namespace nsring {

using json = nlohmann::json;

// {"min":0,"stable_from":6,"members":[0,1,3,4]}
json ideal_to_json(const RelativeIdeal& e);

// {"gens":[3,7,8],"f":5,"type":2,...} — the dossier schema used by the CLI.
json dossier_to_json(const InvariantDossier& d);

// Multi-line human-readable dossier.
std::string dossier_to_text(const InvariantDossier& d);

}  // namespace nsring
