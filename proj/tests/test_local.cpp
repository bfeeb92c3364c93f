#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cubicgap/errors.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/local_structure.hpp"
#include "cubicgap/named_graphs.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicgap;

namespace {

MarkedGraph face_configuration(const Graph& g) {
  const auto cycles = cycles_of_length(g, 5);
  REQUIRE_FALSE(cycles.empty());
  return tilde_subgraph(g, corona_of_cycle(g, cycles.front()).vertices());
}

// Cycles by trying every ordered vertex sequence; canonical rotation and direction.
std::size_t cycle_count_by_sequences(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    VertexSet s;
    for (Vertex v = 0; v < n; ++v) {
      if (pick[v]) s.push_back(v);
    }
    // s is sorted, s[0] is the least; permute the rest.
    do {
      if (s[1] > s.back()) continue;
      bool closed = true;
      for (std::size_t i = 0; i < k; ++i) closed = closed && g.adjacent(s[i], s[(i + 1) % k]);
      if (closed) ++count;
    } while (std::next_permutation(s.begin() + 1, s.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return count;
}

bool external_vertices_well_formed(const MarkedGraph& mg) {
  std::vector<bool> core(mg.graph.order(), false);
  for (Vertex v : mg.core) core[v] = true;
  for (Vertex x : mg.external) {
    const auto nb = mg.graph.neighbors(x);
    if (nb.size() < 2 || nb.size() > 3) return false;
    if (!std::all_of(nb.begin(), nb.end(), [&](Vertex w) { return core[w]; })) return false;
  }
  return mg.core.size() + mg.external.size() == mg.graph.order();
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Random configuration built without the enumerator: random pendant chords and
// random external vertices on random pendant subsets, respecting degree 3.
MarkedGraph random_configuration(std::mt19937& rng) {
  Graph g = corona_product_cycle(5);
  std::uniform_int_distribution<int> coin(0, 1);
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex a = 5 + i;
    const Vertex b = 5 + (i + 2) % 5;
    if (coin(rng) && g.degree(a) < 3 && g.degree(b) < 3) g.add_edge(a, b);
  }
  std::vector<std::vector<Vertex>> externals;
  std::uniform_int_distribution<int> tries(0, 6);
  const int attempts = tries(rng);
  for (int t = 0; t < attempts; ++t) {
    std::vector<Vertex> free;
    for (Vertex v = 5; v < 10; ++v) {
      const std::size_t used = g.degree(v) + static_cast<std::size_t>(std::count_if(
                                                  externals.begin(), externals.end(), [&](const auto& e) {
                                                    return std::find(e.begin(), e.end(), v) != e.end();
                                                  }));
      if (used < 3) free.push_back(v);
    }
    if (free.size() < 2) break;
    std::shuffle(free.begin(), free.end(), rng);
    const std::size_t size = free.size() >= 3 && coin(rng) ? 3 : 2;
    externals.emplace_back(free.begin(), free.begin() + static_cast<long>(size));
  }
  MarkedGraph mg;
  mg.graph = Graph(10 + externals.size());
  for (const auto& [a, b] : g.edges()) mg.graph.add_edge(a, b);
  for (std::size_t j = 0; j < externals.size(); ++j) {
    for (Vertex v : externals[j]) mg.graph.add_edge(10 + j, v);
  }
  for (Vertex v = 0; v < 10; ++v) mg.core.push_back(v);
  for (std::size_t j = 0; j < externals.size(); ++j) mg.external.push_back(10 + j);
  return mg;
}

}  // namespace

TEST_SUITE("local_structure") {
  TEST_CASE("strong open neighbourhood") {
    const Graph p = petersen_graph();
    VertexSet all(p.order());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    CHECK(strong_open_neighbourhood(p, all).empty());
    const auto cycles = cycles_of_length(p, 5);
    CHECK(strong_open_neighbourhood(p, corona_of_cycle(p, cycles.front()).vertices()).empty());

    const Graph d = dodecahedron_graph();
    const auto face = cycles_of_length(d, 5).front();
    CHECK(strong_open_neighbourhood(d, corona_of_cycle(d, face).vertices()).size() == 5);
    // Path 0-1-2: vertex 1 has both ends.
    CHECK(strong_open_neighbourhood(path_graph(3), {0, 2}) == VertexSet{1});
    CHECK_THROWS_AS(strong_open_neighbourhood(p, {10}), std::out_of_range);
  }

  TEST_CASE("tilde subgraph") {
    const MarkedGraph pet = face_configuration(petersen_graph());
    CHECK(pet.external.empty());
    CHECK(isomorphic(pet.graph, petersen_graph()));

    const MarkedGraph dod = face_configuration(dodecahedron_graph());
    CHECK(dod.graph.order() == 15);
    CHECK(dod.graph.edge_count() == 20);
    CHECK(external_vertices_well_formed(dod));

    const MarkedGraph single = tilde_subgraph(petersen_graph(), {3});
    CHECK(single.graph.order() == 1);
    CHECK(single.graph.edge_count() == 0);

    // External-external edges of the host are dropped.
    const Graph k4 = complete_graph(4);
    const MarkedGraph t = tilde_subgraph(k4, {0, 1});
    CHECK(t.graph.order() == 4);
    CHECK(t.graph.edge_count() == 5);
    CHECK_FALSE(t.graph.adjacent(2, 3));
  }

  TEST_CASE("corona of a girth cycle") {
    const Graph p = petersen_graph();
    for (const auto& cycle : cycles_of_length(p, 5)) {
      const Corona c = corona_of_cycle(p, cycle);
      CHECK(c.vertices().size() == 10);
      CHECK(c.edges().size() == 10);
      for (std::size_t i = 0; i < 5; ++i) {
        CHECK(p.adjacent(c.cycle[i], c.pendants[i]));
        CHECK(std::find(cycle.begin(), cycle.end(), c.pendants[i]) == cycle.end());
      }
    }
    CHECK_THROWS_AS(corona_of_cycle(cycle_graph(6), {0, 1, 2, 3, 4, 5}), std::invalid_argument);
    CHECK_THROWS_AS(corona_of_cycle(p, {0, 1, 2, 3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(corona_of_cycle(p, cycles_of_length(p, 6).front()), std::invalid_argument);
  }

  TEST_CASE("cycle listing") {
    CHECK(cycles_of_length(complete_graph(4), 3).size() == 4);
    CHECK(cycles_of_length(complete_graph(4), 4).size() == 3);
    CHECK(cycles_of_length(petersen_graph(), 5).size() == 12);
    CHECK(cycles_of_length(petersen_graph(), 6).size() == 10);
    CHECK(cycles_of_length(dodecahedron_graph(), 5).size() == 12);
    for (const Graph& g : oracle::all_graphs(5)) {
      for (std::size_t k = 3; k <= 5; ++k) CHECK(cycles_of_length(g, k).size() == cycle_count_by_sequences(g, k));
    }
  }

  TEST_CASE("girth 5 configurations") {
    const auto survivors = enumerate_girth5_extensions();
    REQUIRE(survivors.size() == 13);

    std::multiset<std::pair<std::size_t, std::size_t>> shapes;
    for (const auto& mg : survivors) {
      shapes.emplace(mg.graph.order(), mg.graph.edge_count());
      CHECK(mg.core.size() == 10);
      CHECK(external_vertices_well_formed(mg));
      CHECK(max_degree(mg.graph) <= 3);
      CHECK(girth(mg.graph) >= Girth(5));
      CHECK(is_psd(m_ss_from_marked(mg)));
      for (Vertex x : mg.external) {
        for (Vertex y : mg.external) CHECK_FALSE(mg.graph.adjacent(x, y));
      }
    }
    const std::multiset<std::pair<std::size_t, std::size_t>> expected{
        {10, 10}, {11, 12}, {14, 18}, {13, 16}, {12, 14}, {13, 16}, {14, 18},
        {15, 20}, {14, 19}, {13, 16}, {13, 17}, {11, 15}, {10, 15}};
    CHECK(shapes == expected);

    for (std::size_t i = 0; i < survivors.size(); ++i) {
      for (std::size_t j = i + 1; j < survivors.size(); ++j) {
        CHECK_FALSE(colored_isomorphic(survivors[i], survivors[j]));
        CHECK(colored_canonical_form(survivors[i]) < colored_canonical_form(survivors[j]));
      }
    }

    const MarkedGraph pet = face_configuration(petersen_graph());
    const MarkedGraph dod = face_configuration(dodecahedron_graph());
    CHECK(std::count_if(survivors.begin(), survivors.end(), [&](const auto& s) { return colored_isomorphic(s, pet); }) == 1);
    CHECK(std::count_if(survivors.begin(), survivors.end(), [&](const auto& s) { return colored_isomorphic(s, dod); }) == 1);
    CHECK_FALSE(colored_isomorphic(pet, dod));

    // Plain isomorphism does not merge any survivors either.
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      for (std::size_t j = i + 1; j < survivors.size(); ++j) {
        CHECK_FALSE(isomorphic(survivors[i].graph, survivors[j].graph));
      }
    }
  }

  TEST_CASE("rejected candidates are not positive semidefinite") {
    const auto candidates = girth5_candidates();
    const auto survivors = enumerate_girth5_extensions();
    std::size_t rejected = 0;
    for (const auto& mg : candidates) {
      const bool survived = std::any_of(survivors.begin(), survivors.end(),
                                        [&](const auto& s) { return colored_isomorphic(s, mg); });
      if (!survived) {
        ++rejected;
        CHECK_FALSE(is_psd(m_ss_from_marked(mg)));
      }
    }
    CHECK(rejected + survivors.size() == candidates.size());
    CHECK(rejected > 0);
  }

  TEST_CASE("random configurations land on the survivor list exactly when PSD") {
    const auto survivors = enumerate_girth5_extensions();
    std::map<CanonicalForm, bool> known;
    for (const auto& s : survivors) known[colored_canonical_form(s)] = true;
    std::mt19937 rng(5);
    std::size_t sampled_rejections = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      const MarkedGraph mg = random_configuration(rng);
      if (girth(mg.graph) < Girth(5)) continue;
      const bool psd = is_psd(m_ss_from_marked(mg));
      CHECK(psd == known.contains(colored_canonical_form(mg)));
      if (!psd) ++sampled_rejections;
    }
    CHECK(sampled_rejections >= 1000);
  }

  TEST_CASE("M_SS from the configuration matches the host") {
    std::vector<Graph> hosts{petersen_graph(), dodecahedron_graph(), prism_graph(), complete_bipartite(3, 3),
                             generalized_petersen(7, 2), generalized_petersen(7, 3)};
    for (std::size_t n = 4; n <= 10; n += 2) {
      for (const Graph& g : oracle::connected_cubic_classes(n)) hosts.push_back(g);
    }
    for (const Graph& g : hosts) {
      const std::size_t k = girth(g).length();
      for (const auto& cycle : cycles_of_length(g, k)) {
        const VertexSet s = corona_of_cycle(g, cycle).vertices();
        const MarkedGraph mg = tilde_subgraph(g, s);
        CHECK(m_ss_from_marked(mg) == m_submatrix(g, s));
      }
    }

    VertexSet all(10);
    for (Vertex v = 0; v < 10; ++v) all[v] = v;
    const MarkedGraph whole{petersen_graph(), all, {}};
    CHECK(m_ss_from_marked(whole) == m_matrix(petersen_graph()));

    const MarkedGraph bare{corona_product_cycle(5), all, {}};
    const IntMatrix m = m_ss_from_marked(bare);
    for (Vertex i = 5; i < 10; ++i) {
      for (Vertex j = 5; j < 10; ++j) {
        if (i != j) CHECK(m(i, j) == 0);
      }
    }

    // Pendant v_0 with two neighbours outside the corona.
    MarkedGraph deg1{Graph::from_edges(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8},
                                            {4, 9}, {5, 10}, {5, 11}}),
                     {0, 1, 2, 3, 4, 5, 10, 11},
                     {}};
    CHECK(det_exact(m_ss_from_marked(deg1)) == -4);
  }

  TEST_CASE("colored isomorphism") {
    const auto survivors = enumerate_girth5_extensions();
    std::mt19937 rng(11);
    for (const auto& s : survivors) {
      CHECK(colored_isomorphic(s, s));
      std::vector<Vertex> perm(s.graph.order());
      for (Vertex v = 0; v < perm.size(); ++v) perm[v] = v;
      std::shuffle(perm.begin(), perm.end(), rng);
      MarkedGraph copy{s.graph.relabeled(perm), {}, {}};
      for (Vertex v : s.core) copy.core.push_back(perm[v]);
      for (Vertex v : s.external) copy.external.push_back(perm[v]);
      CHECK(colored_isomorphic(s, copy));
    }
    // Same graph, different marking.
    const MarkedGraph a{path_graph(3), {0, 1}, {2}};
    const MarkedGraph b{path_graph(3), {1, 2}, {0}};
    const MarkedGraph c{path_graph(3), {0, 2}, {1}};
    CHECK(colored_isomorphic(a, b));
    CHECK_FALSE(colored_isomorphic(a, c));
    CHECK(a.core_mask() == "110");
  }

  TEST_CASE("girth 5 endgame") {
    CHECK(verify_girth5_endgame(petersen_graph()) == Girth5Endgame::Petersen);
    CHECK(verify_girth5_endgame(dodecahedron_graph()) == Girth5Endgame::Dodecahedron);
    CHECK(to_string(Girth5Endgame::Inconsistent) == "INCONSISTENT");
    const Graph gp72 = generalized_petersen(7, 2);
    REQUIRE(girth(gp72) == Girth(5));
    REQUIRE_FALSE(gap_check(gp72, open_gap()).has_gap);
    CHECK_THROWS_AS(verify_girth5_endgame(gp72), std::invalid_argument);
    CHECK_THROWS_AS(verify_girth5_endgame(complete_bipartite(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(verify_girth5_endgame(cycle_graph(5)), std::invalid_argument);
  }
}
