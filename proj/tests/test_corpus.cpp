#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "nsring/corpus.hpp"
#include "oracles.hpp"

using namespace nsring;

TEST_CASE("genus tree: counts for small genus") {
  const auto corpus = enumerate_by_genus(3);
  CHECK(corpus.size() == 8);  // 1 + 1 + 2 + 4
  std::map<Int, long> per_genus;
  for (const auto& h : corpus) ++per_genus[h.genus()];
  CHECK(per_genus[0] == 1);
  CHECK(per_genus[1] == 1);
  CHECK(per_genus[2] == 2);
  CHECK(per_genus[3] == 4);
}

TEST_CASE("genus tree matches the brute-force gap-subset oracle up to genus 8") {
  const auto corpus = enumerate_by_genus(8);
  std::map<Int, long> per_genus;
  for (const auto& h : corpus) ++per_genus[h.genus()];
  for (int g = 0; g <= 8; ++g) {
    CAPTURE(g);
    CHECK(per_genus[g] == oracles::gap_subset_count(g));
  }
}

TEST_CASE("genus tree is duplicate-free and deterministically ordered") {
  const auto corpus = enumerate_by_genus(7);
  std::set<std::vector<Int>> gap_sets;
  for (const auto& h : corpus) gap_sets.insert(h.gaps());
  CHECK(gap_sets.size() == corpus.size());

  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const auto& a = corpus[i];
    const auto& b = corpus[i + 1];
    const bool ordered =
        a.genus() < b.genus() || (a.genus() == b.genus() && a.gaps() < b.gaps());
    CHECK(ordered);
  }

  CHECK(enumerate_by_genus(7).size() == corpus.size());
}

TEST_CASE("three-generated sweep cross-checks the genus enumeration") {
  const Int f_max = 10;
  std::set<std::vector<Int>> from_sweep;
  for (const auto& h : enumerate_three_generated(f_max))
    from_sweep.insert(h.minimal_generators());

  std::set<std::vector<Int>> from_tree;
  for (const auto& h : enumerate_by_genus(10)) {  // f <= 10 forces genus <= 10
    if (h.embedding_dimension() == 3 && h.frobenius() <= f_max)
      from_tree.insert(h.minimal_generators());
  }
  CHECK(from_sweep == from_tree);
  CHECK(from_sweep.count({3, 7, 8}) == 1);
}

TEST_CASE("three-generated sweep is deterministic and respects the bound") {
  const auto sweep = enumerate_three_generated(30);
  for (const auto& h : sweep) {
    CHECK(h.embedding_dimension() == 3);
    CHECK(h.frobenius() <= 30);
  }
  const auto again = enumerate_three_generated(30);
  CHECK(sweep.size() == again.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) CHECK(sweep[i] == again[i]);
}

TEST_CASE("every suite runs clean at reduced bounds") {
  SuiteOptions opt;
  opt.genus_max = 8;
  opt.f_max = 40;
  opt.workers = 2;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const auto rep = run_suite(name, opt);
    if (!rep.ok()) {
      for (const auto& v : rep.violations)
        MESSAGE(name, ": ", v.property, " observed ", v.observed, " expected ",
                v.expected);
    }
    CHECK(rep.ok());
    CHECK(rep.total > 0);
  }
  CHECK_THROWS_AS(run_suite("nonsense", opt), std::invalid_argument);
}

TEST_CASE("suite results are worker-count independent") {
  SuiteOptions one;
  one.genus_max = 7;
  one.workers = 1;
  SuiteOptions four;
  four.genus_max = 7;
  four.workers = 4;
  const auto a = run_suite("prop24", one);
  const auto b = run_suite("prop24", four);
  CHECK(a.total == b.total);
  CHECK(a.violations.size() == b.violations.size());
  CHECK(a.counts == b.counts);
}

TEST_CASE("report rendering") {
  SuiteOptions opt;
  opt.genus_max = 4;
  const auto rep = run_suite("thm14", opt);
  const auto text = report_to_text(rep);
  CHECK(text.find("suite thm14") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
  const auto lines = report_to_json_lines(rep);
  CHECK(lines.find("\"suite\":\"thm14\"") != std::string::npos);
}
