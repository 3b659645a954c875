#include <vector>

#include "doctest.h"
#include "nsring/classify.hpp"
#include "nsring/constructs.hpp"

using namespace nsring;

namespace {

NumericalSemigroup make(std::initializer_list<Int> gens) {
  return NumericalSemigroup::from_generators(std::vector<Int>(gens));
}

bool all_ok(const FamilyInstance& inst) {
  bool ok = true;
  for (const auto& chk : check_family_instance(inst)) {
    if (!chk.ok) {
      MESSAGE("prediction failed: ", chk.key, " expected ", chk.expected.dump(),
              " observed ", chk.observed.dump());
      ok = false;
    }
  }
  return ok;
}

}  // namespace

TEST_CASE("apery lift family: <2,3> lifted by 3") {
  const auto seed = make({2, 3});

  const auto h2 = apery_lift_family(seed, 3, 2);
  CHECK(h2.semigroup == make({3, 8, 10}));
  CHECK(h2.predicted.at("class") == "2-AGL");
  CHECK(all_ok(h2));

  const auto h0 = apery_lift_family(seed, 3, 0);
  CHECK(h0.semigroup == seed);
  CHECK(h0.predicted.at("class") == "Gorenstein");
  CHECK(all_ok(h0));

  const auto h1 = apery_lift_family(seed, 3, 1);
  CHECK(h1.predicted.at("class") == "AGL");
  CHECK(all_ok(h1));
}

TEST_CASE("apery lift family: larger steps and counts") {
  CHECK(all_ok(apery_lift_family(make({3, 4}), 4, 2)));
  CHECK(all_ok(apery_lift_family(make({3, 4}), 4, 3)));
  CHECK(all_ok(apery_lift_family(make({4, 5}), 4, 2)));
  CHECK(all_ok(apery_lift_family(make({3, 5}), 5, 4)));
  const auto inst = apery_lift_family(make({3, 4}), 4, 2);
  CHECK(inst.predicted.at("decomp_free") == 2);  // e - 2
}

TEST_CASE("apery lift family rejects degenerate input") {
  CHECK_THROWS_AS(apery_lift_family(make({2, 3}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(apery_lift_family(make({3, 7, 8}), 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(apery_lift_family(make({2, 3}), 4, -1), std::invalid_argument);
  CHECK_THROWS_AS(apery_lift_family(make({3, 4}), 5, 1), std::invalid_argument);
}

TEST_CASE("multiplicity-three family") {
  const auto c4 = multiplicity_three_family(4);
  CHECK(c4.semigroup == make({3, 7, 8}));
  CHECK(all_ok(c4));

  const auto c5 = multiplicity_three_family(5);
  CHECK(c5.semigroup == make({3, 8, 10}));
  CHECK(all_ok(c5));

  CHECK_THROWS_AS(multiplicity_three_family(6), std::invalid_argument);
  CHECK_THROWS_AS(multiplicity_three_family(3), std::invalid_argument);
}

TEST_CASE("minimal multiplicity family") {
  const auto e3 = minimal_multiplicity_family(3, 2);
  CHECK(e3.semigroup == make({3, 7, 8}));
  CHECK(all_ok(e3));

  const auto e4 = minimal_multiplicity_family(4, 2);
  CHECK(e4.semigroup == make({4, 9, 10, 11}));
  CHECK(all_ok(e4));

  CHECK(all_ok(minimal_multiplicity_family(5, 3)));

  CHECK_THROWS_AS(minimal_multiplicity_family(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(minimal_multiplicity_family(3, 1), std::invalid_argument);
}

TEST_CASE("non-free family") {
  const auto e4 = nonfree_family(4);
  CHECK(e4.semigroup == make({4, 7, 9, 10}));
  CHECK(e4.predicted.at("decomp_free") == 1);
  CHECK(e4.predicted.at("decomp_socle") == 1);
  CHECK(all_ok(e4));

  const auto e5 = nonfree_family(5);
  CHECK(e5.predicted.at("decomp_socle") == 2);
  CHECK(all_ok(e5));

  CHECK_THROWS_AS(nonfree_family(3), std::invalid_argument);
}

TEST_CASE("prediction mismatches are reported, not asserted") {
  FamilyInstance broken = multiplicity_three_family(4);
  broken.predicted["rank"] = 1;  // wrong on purpose
  bool saw_failure = false;
  for (const auto& chk : check_family_instance(broken)) {
    if (chk.key == "rank") {
      CHECK_FALSE(chk.ok);
      CHECK(chk.observed == 2);
      saw_failure = true;
    }
  }
  CHECK(saw_failure);
}
