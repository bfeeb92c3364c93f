#include <algorithm>
#include <random>
#include <set>

#include "cubicgap/canonical.hpp"
#include "cubicgap/named_graphs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicgap;

namespace {

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> p(n);
  for (Vertex i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Coloring permute_colors(const Coloring& c, const std::vector<Vertex>& perm) {
  Coloring out(c.size());
  for (Vertex v = 0; v < c.size(); ++v) out[perm[v]] = c[v];
  return out;
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("isomorphism class counts of all small graphs") {
    // Unlabelled graphs on 1..6 vertices: 1, 2, 4, 11, 34, 156.
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (std::size_t n = 0; n <= 6; ++n) {
      std::set<CanonicalForm> forms;
      for (const auto& g : oracle::all_graphs(n)) forms.insert(canonical_form(g));
      CHECK(forms.size() == expected[n]);
    }
  }

  TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(17);
    const std::vector<Graph> graphs = {petersen_graph(), dodecahedron_graph(), tutte_eight_cage(),
                                       complete_graph(7), corona_product_cycle(6), generalized_petersen(12, 5),
                                       Graph(5), cycle_graph(9)};
    for (const auto& g : graphs) {
      const auto base = canonical_form(g);
      for (int t = 0; t < 5; ++t) {
        const auto perm = random_permutation(g.order(), rng);
        CHECK(canonical_form(g.relabeled(perm)) == base);
      }
      CHECK(canonical_graph(g) == canonical_graph(g.relabeled(random_permutation(g.order(), rng))));
      CHECK(isomorphic(canonical_graph(g), g));
    }
  }

  TEST_CASE("canonical form agrees with brute-force isomorphism") {
    std::mt19937 rng(23);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 5 + trial % 4;
      Graph a(n), b(n);
      for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
          if (coin(rng)) a.add_edge(i, j);
          if (coin(rng)) b.add_edge(i, j);
        }
      }
      if (trial % 3 == 0) b = a.relabeled(random_permutation(n, rng));
      CHECK(isomorphic(a, b) == oracle::isomorphic_by_permutations(a, b));
    }
  }

  TEST_CASE("colours are respected") {
    const Graph p4 = path_graph(4);
    CHECK(isomorphic(p4, {1, 0, 0, 0}, p4, {0, 0, 0, 1}));
    CHECK_FALSE(isomorphic(p4, {1, 0, 0, 0}, p4, {0, 1, 0, 0}));
    CHECK_FALSE(isomorphic(p4, {1, 1, 1, 1}, p4, {2, 2, 2, 2}));
    std::mt19937 rng(4);
    const Graph c = corona_product_cycle(5);
    Coloring core(10, 0);
    for (Vertex v = 5; v < 10; ++v) core[v] = 1;
    for (int t = 0; t < 10; ++t) {
      const auto perm = random_permutation(10, rng);
      CHECK(canonical_form(c, core) == canonical_form(c.relabeled(perm), permute_colors(core, perm)));
    }
    CHECK_THROWS_AS(canonical_form(c, {0, 1}), std::invalid_argument);
  }

  TEST_CASE("labeling maps the graph onto its canonical form") {
    const Graph t = tutte_eight_cage();
    const auto res = canonical_labeling(t);
    const Graph relabelled = t.relabeled(res.labeling);
    CHECK(canonical_form(relabelled) == res.form);
  }
}
