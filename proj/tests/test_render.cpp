#include "doctest.h"
#include "nsring/render.hpp"

using namespace nsring;

namespace {

NumericalSemigroup make(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(std::vector<Int>(gens));
}

}  // namespace

TEST_CASE("ideal JSON form") {
  const auto h = make({3, 7, 8});
  const auto j = ideal_to_json(canonical_ideal(h));
  CHECK(j.at("min") == 0);
  CHECK(j.at("stable_from") == 6);
  CHECK(j.at("members") == std::vector<Int>{0, 1, 3, 4});
}

TEST_CASE("dossier JSON carries the schema fields") {
  const auto d = compute_dossier(make({3, 7, 8}));
  const auto j = dossier_to_json(d);
  CHECK(j.at("gens") == std::vector<Int>{3, 7, 8});
  CHECK(j.at("f") == 5);
  CHECK(j.at("type") == 2);
  CHECK(j.at("rank") == 2);
  CHECK(j.at("class") == "2-AGL");
  CHECK(j.at("red") == 2);
  CHECK(j.at("e0") == 6);
  CHECK(j.at("e1") == 4);
  CHECK(j.at("lenRI") == 4);
  CHECK(j.at("hilbert") == std::vector<Int>{4, 8, 14, 20, 26, 32, 38});
  CHECK(j.at("sally") == std::vector<Int>{2, 2, 2, 2, 2, 2});
  CHECK(j.at("decomp").at("free") == 1);
  CHECK(j.at("decomp").at("socle") == 0);
  CHECK(j.at("kr_free") == true);
  CHECK(j.at("B").at("gens") == std::vector<Int>{3, 4, 5});
  CHECK(j.at("B").at("class") == "AGL");
  CHECK(j.at("idealization").at("e") == 6);
  CHECK(j.at("thm14").size() == 7);
}

TEST_CASE("dossier JSON golden bytes") {
  const auto d = compute_dossier(make({3, 7, 8}));
  CHECK(dossier_to_json(d).dump() ==
        "{\"B\":{\"class\":\"AGL\",\"gens\":[3,4,5]},\"class\":\"2-AGL\","
        "\"decomp\":{\"free\":1,\"socle\":0},\"e0\":6,\"e1\":4,\"f\":5,"
        "\"gens\":[3,7,8],\"hilbert\":[4,8,14,20,26,32,38],"
        "\"idealization\":{\"e\":6,\"rank\":2,\"v\":6},\"kr_free\":true,"
        "\"lenRI\":4,\"rank\":2,\"red\":2,\"sally\":[2,2,2,2,2,2],"
        "\"thm14\":[true,true,true,true,true,true,true],\"type\":2}");
}

TEST_CASE("dossier JSON round-trips byte-identically") {
  for (const auto& gens :
       {std::vector<Int>{3, 7, 8}, {2, 3}, {1}, {5, 7, 9, 13}, {4, 9, 11, 14}}) {
    const auto d = compute_dossier(NumericalSemigroup::from_generators(gens));
    const std::string emitted = dossier_to_json(d).dump();
    const std::string reparsed = json::parse(emitted).dump();
    CHECK(emitted == reparsed);
  }
}

TEST_CASE("dossier JSON uses nulls off the 2-AGL path") {
  const auto d = compute_dossier(make({2, 3}));
  const auto j = dossier_to_json(d);
  CHECK(j.at("decomp").is_null());
  CHECK(j.at("kr_free") == false);
  CHECK_FALSE(j.at("B").is_null());

  const auto dvr = dossier_to_json(compute_dossier(make({1})));
  CHECK(dvr.at("B").is_null());
  CHECK(dvr.at("idealization").is_null());
  CHECK(dvr.at("class") == "DVR");
}

TEST_CASE("dossier text highlights the classification") {
  const auto text = dossier_to_text(compute_dossier(make({3, 7, 8})));
  CHECK(text.find("2-AGL") != std::string::npos);
  CHECK(text.find("B = m:m") != std::string::npos);

  const auto sym = dossier_to_text(compute_dossier(make({2, 3})));
  CHECK(sym.find("Gorenstein (symmetric)") != std::string::npos);

  const auto dvr = dossier_to_text(compute_dossier(make({1})));
  CHECK(dvr.find("Gorenstein (DVR)") != std::string::npos);
}
