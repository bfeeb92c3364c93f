#include <algorithm>
#include <set>

#include "cubicgap/canonical.hpp"
#include "cubicgap/cubic_enum.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/named_graphs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicgap;

namespace {

std::vector<std::string> survivor_tags(const ClassificationRow& row) {
  std::vector<std::string> out;
  for (const auto& s : row.survivors) out.push_back(s.tag);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE("cubic_enum") {
  TEST_CASE("counts match the brute-force oracle") {
    for (std::size_t n = 4; n <= 10; n += 2) {
      CAPTURE(n);
      const auto mine = enumerate_cubic(EnumSpec{n});
      const auto classes = oracle::connected_cubic_classes(n);
      REQUIRE(mine.size() == classes.size());
      // Each oracle class is hit by exactly one emitted graph.
      for (const Graph& c : classes) {
        const auto hits = std::count_if(mine.begin(), mine.end(),
                                         [&](const Graph& g) { return oracle::isomorphic_by_permutations(c, g); });
        CHECK(hits == 1);
      }
    }
    CHECK(count_cubic(EnumSpec{4}) == 1);
    CHECK(count_cubic(EnumSpec{6}) == 2);
  }

  TEST_CASE("girth bound against the oracle") {
    for (std::size_t n = 4; n <= 10; n += 2) {
      const auto classes = oracle::connected_cubic_classes(n);
      for (std::size_t g : {4, 5}) {
        const auto expected = std::count_if(classes.begin(), classes.end(), [&](const Graph& c) {
          return oracle::girth_by_cycle_search(c) >= g;
        });
        CHECK(count_cubic(EnumSpec{n, g}) == static_cast<std::size_t>(expected));
      }
    }
    const auto petersen = enumerate_cubic(EnumSpec{10, 5});
    REQUIRE(petersen.size() == 1);
    CHECK(canonical_form(petersen[0]) == canonical_form(petersen_graph()));
    CHECK(count_cubic(EnumSpec{12, 5}) == 2);
    CHECK(count_cubic(EnumSpec{14, 6}) == 1);  // Heawood
  }

  TEST_CASE("larger orders are isomorph-free") {
    // Published counts of connected cubic graphs on 12 and 14 vertices.
    const std::pair<std::size_t, std::size_t> known[] = {{12, 85}, {14, 509}};
    for (const auto& [n, count] : known) {
      std::set<CanonicalForm> forms;
      std::size_t total = 0;
      enumerate_cubic(EnumSpec{n}, [&](const Graph& g) {
        ++total;
        CHECK(is_cubic(g));
        CHECK(is_connected(g));
        CHECK(g.order() == n);
        forms.insert(canonical_form(g));
      });
      CHECK(total == count);
      CHECK(forms.size() == total);
    }
  }

  TEST_CASE("emitted graphs meet the requested girth") {
    for (std::size_t g = 3; g <= 5; ++g) {
      enumerate_cubic(EnumSpec{12, g}, [&](const Graph& h) {
        CHECK(is_cubic(h));
        CHECK(is_connected(h));
        CHECK(girth(h) >= Girth(g));
      });
    }
  }

  TEST_CASE("disconnected graphs") {
    CHECK(count_cubic(EnumSpec{8, 3, false}) == 6);
    CHECK(count_cubic(EnumSpec{10, 3, false}) == 21);
    CHECK(count_cubic(EnumSpec{12, 3, false}) == 94);
    std::set<CanonicalForm> forms;
    enumerate_cubic(EnumSpec{12, 3, false}, [&](const Graph& g) {
      CHECK(is_cubic(g));
      forms.insert(canonical_form(g));
    });
    CHECK(forms.size() == 94);
    CHECK(count_cubic(EnumSpec{8, 4, false}) == 2);  // the cube and the Wagner graph
  }

  TEST_CASE("order is deterministic") {
    std::vector<std::string> a;
    std::vector<std::string> b;
    enumerate_cubic(EnumSpec{12}, [&](const Graph& g) { a.push_back(to_graph6(g)); });
    enumerate_cubic(EnumSpec{12}, [&](const Graph& g) { b.push_back(to_graph6(g)); });
    CHECK(a == b);
  }

  TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(enumerate_cubic(EnumSpec{7}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cubic(EnumSpec{2}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cubic(EnumSpec{18}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cubic(EnumSpec{20, 3, true, 20}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cubic(EnumSpec{8, 2}), std::invalid_argument);
    CHECK_THROWS_AS(verify_classification(18), std::invalid_argument);
    CHECK_THROWS_AS(verify_classification(2), std::invalid_argument);
  }

  TEST_CASE("classification up to 14 vertices") {
    std::size_t calls = 0;
    const ClassificationReport report = verify_classification(14, kDefaultEnumerationCap,
                                                              [&](const ClassificationRow&) { ++calls; });
    CHECK(report.ok);
    CHECK(report.failures.empty());
    CHECK(calls == 6);
    REQUIRE(report.per_n.size() == 6);
    const std::size_t totals[] = {1, 2, 5, 19, 85, 509};
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(report.per_n[i].n == 4 + 2 * i);
      CHECK(report.per_n[i].total == totals[i]);
      CHECK(report.per_n[i].equivalence_counterexamples == 0);
      for (const auto& s : report.per_n[i].survivors) CHECK(is_psd(m_matrix(parse_graph6(s.graph6))));
    }
    using Tags = std::vector<std::string>;
    CHECK(survivor_tags(report.per_n[0]).empty());
    CHECK(survivor_tags(report.per_n[1]) == Tags{"K33", "PRISM"});
    CHECK(survivor_tags(report.per_n[2]).empty());
    CHECK(survivor_tags(report.per_n[3]) == Tags{"PETERSEN"});
    CHECK(survivor_tags(report.per_n[4]) == Tags{"XN(2)"});
    CHECK(survivor_tags(report.per_n[5]).empty());

    const GirthProfile profile = girth_profile(report);
    CHECK(profile.ok);
    for (const auto& row : profile.rows) {
      if (row.girth == Girth(3)) CHECK(row.tags == Tags{"PRISM"});
      if (row.girth == Girth(4)) CHECK(row.tags == Tags{"K33", "XN(2)"});
      if (row.girth == Girth(5)) CHECK(row.tags == Tags{"PETERSEN"});
      if (row.girth == Girth(6) || row.girth == Girth(7)) CHECK(row.tags.empty());
    }
  }

  TEST_CASE("girth profile flags unexpected survivors") {
    ClassificationReport fake{{ClassificationRow{14, 1, {SurvivorRecord{"M?????????????", "NOT_IN_LIST", Girth(6)}}, 0}},
                              {},
                              true};
    const GirthProfile profile = girth_profile(fake);
    CHECK_FALSE(profile.ok);
    CHECK(profile.failures.size() == 1);
  }
}
