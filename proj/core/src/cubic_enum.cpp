#include "cubicgap/cubic_enum.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "cubicgap/canonical.hpp"
#include "cubicgap/errors.hpp"
#include "cubicgap/families.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/named_graphs.hpp"

namespace cubicgap {

namespace {

void check_spec(const EnumSpec& spec) {
  if (spec.cap > kHardEnumerationCap) {
    throw std::invalid_argument("enumeration cap " + std::to_string(spec.cap) + " exceeds the hard cap " +
                                std::to_string(kHardEnumerationCap));
  }
  if (spec.n % 2 != 0) throw std::invalid_argument("no cubic graph has an odd number of vertices");
  if (spec.n < 4) throw std::invalid_argument("cubic graphs need at least 4 vertices");
  if (spec.n > spec.cap) {
    throw std::invalid_argument("n = " + std::to_string(spec.n) + " is above the enumeration cap " +
                                std::to_string(spec.cap));
  }
  if (spec.min_girth < 3) throw std::invalid_argument("min_girth must be at least 3");
}

std::size_t common_count(const Graph& g, Vertex u, Vertex v) {
  std::size_t c = 0;
  for (std::size_t w = 0; w < g.words_per_row(); ++w) c += static_cast<std::size_t>(std::popcount(g.row(u)[w] & g.row(v)[w]));
  return c;
}

// Triangles and 4-cycles through the edge xy.
std::size_t edge_invariant(const Graph& g, Vertex x, Vertex y) {
  std::size_t quads = 0;
  for (Vertex p : g.neighbors(x)) {
    if (p == y) continue;
    for (Vertex q : g.neighbors(y)) {
      if (q != x && q != p && g.adjacent(p, q)) ++quads;
    }
  }
  return common_count(g, x, y) * 64 + quads;
}

VertexSet others(const Graph& g, Vertex x, Vertex skip) {
  VertexSet out;
  for (Vertex w : g.neighbors(x)) {
    if (w != skip) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Reduction along xy gives a simple graph: x's other neighbours are not
// adjacent, nor are y's, and the two pairs differ. The result may be
// disconnected when xy is a bridge.
bool reducible(const Graph& g, Vertex x, Vertex y) {
  const VertexSet ab = others(g, x, y);
  const VertexSet cd = others(g, y, x);
  if (g.adjacent(ab[0], ab[1]) || g.adjacent(cd[0], cd[1])) return false;
  return !((ab[0] == cd[0] && ab[1] == cd[1]) || (ab[0] == cd[1] && ab[1] == cd[0]));
}

// Middle edges pq of diamonds (K4 minus an edge) whose removal, joining the
// outer neighbours u and v of the two degree-2 ends, leaves a simple graph.
std::vector<Edge> reducible_diamonds(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& [p, q] : g.edges()) {
    const VertexSet ab = others(g, p, q);
    const VertexSet cd = others(g, q, p);
    if (ab != cd || g.adjacent(ab[0], ab[1])) continue;
    auto outer = [&](Vertex end) {
      for (Vertex w : g.neighbors(end)) {
        if (w != p && w != q) return w;
      }
      throw ContractViolation("diamond end without an outer neighbour");
    };
    const Vertex u = outer(ab[0]);
    const Vertex v = outer(ab[1]);
    if (u != v && !g.adjacent(u, v)) out.emplace_back(p, q);
  }
  return out;
}

Graph disjoint_union(const std::vector<const Graph*>& parts) {
  std::size_t n = 0;
  for (const Graph* g : parts) n += g->order();
  Graph out(n);
  std::size_t base = 0;
  for (const Graph* g : parts) {
    for (const auto& [a, b] : g->edges()) out.add_edge(base + a, base + b);
    base += g->order();
  }
  return out;
}

Coloring mark_edge(std::size_t n, Vertex x, Vertex y) {
  Coloring c(n, 0);
  c[x] = 1;
  c[y] = 1;
  return c;
}

// Subdivides edges i and j of `edges` with new vertices n and n + 1 and joins them.
Graph insert_edge(std::size_t n, const std::vector<Edge>& edges, std::size_t i, std::size_t j) {
  const Vertex x = n;
  const Vertex y = n + 1;
  Graph child(n + 2);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (k != i && k != j) child.add_edge(edges[k].first, edges[k].second);
  }
  child.add_edge(edges[i].first, x);
  child.add_edge(x, edges[i].second);
  child.add_edge(edges[j].first, y);
  child.add_edge(y, edges[j].second);
  child.add_edge(x, y);
  return child;
}

// Builds every connected cubic graph from K4, level by level. A graph's
// parent is its reduction along the canonical reducible edge: one connected
// graph, or two when that edge is a bridge. Graphs with no reducible edge are
// reduced by removing a diamond instead. Children are kept only when the
// inserted piece is in the orbit of the canonical one, so each class appears
// once.
class Generator {
 public:
  Generator(std::size_t target, std::size_t min_girth, const std::function<void(const Graph&)>& emit)
      : target_(target), min_girth_(min_girth), emit_(emit), levels_(target + 1) {}

  void run() {
    for (std::size_t m = 4; m <= target_; m += 2) {
      last_ = m == target_;
      if (m == 4) {
        sink(complete_graph(4));
        continue;
      }
      for (const Graph& p : levels_[m - 2]) {
        const auto edges = p.edges();
        extend(p.order(), edges, [&](std::size_t, std::size_t) { return true; });
      }
      for (std::size_t m1 = 4; 2 * m1 <= m - 2; m1 += 2) {
        const std::size_t m2 = m - 2 - m1;
        for (std::size_t i = 0; i < levels_[m1].size(); ++i) {
          for (std::size_t j = m1 == m2 ? i : 0; j < levels_[m2].size(); ++j) {
            const Graph u = disjoint_union({&levels_[m1][i], &levels_[m2][j]});
            const auto edges = u.edges();
            // One edge in each component.
            extend(u.order(), edges, [&](std::size_t a, std::size_t b) {
              return (edges[a].first < m1) != (edges[b].first < m1);
            });
          }
        }
      }
      if (m >= 8) {
        for (const Graph& p : levels_[m - 4]) extend_diamond(p);
      }
    }
  }

 private:
  // Replaces each edge uv by u-a, b-v and a new diamond on a, b, p, q.
  void extend_diamond(const Graph& parent) {
    const std::size_t n = parent.order();
    const auto edges = parent.edges();
    const Vertex a = n, b = n + 1, p = n + 2, q = n + 3;
    std::set<CanonicalForm> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Graph child(n + 4);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k != i) child.add_edge(edges[k].first, edges[k].second);
      }
      child.add_edge(edges[i].first, a);
      child.add_edge(b, edges[i].second);
      for (Vertex end : {a, b}) {
        child.add_edge(end, p);
        child.add_edge(end, q);
      }
      child.add_edge(p, q);
      CanonicalForm form;
      if (!accept_diamond(child, p, q, form)) continue;
      if (!seen.insert(std::move(form)).second) continue;
      sink(std::move(child));
    }
  }

  // Graphs with a reducible edge come from edge insertion; otherwise pq must
  // be in the orbit of the canonical reducible diamond.
  static bool accept_diamond(const Graph& g, Vertex p, Vertex q, CanonicalForm& form) {
    for (const auto& [a, b] : g.edges()) {
      if (reducible(g, a, b)) return false;
    }
    const std::vector<Edge> diamonds = reducible_diamonds(g);
    const CanonicalResult canon = canonical_labeling(g);
    form = canon.form;
    if (diamonds.size() == 1) return true;
    auto pair = [&](const Edge& e) {
      const Vertex x = canon.labeling[e.first];
      const Vertex y = canon.labeling[e.second];
      return std::make_pair(std::min(x, y), std::max(x, y));
    };
    const Edge chosen = *std::min_element(diamonds.begin(), diamonds.end(),
                                          [&](const Edge& x, const Edge& y) { return pair(x) < pair(y); });
    if (pair(chosen) == pair({p, q})) return true;
    return canonical_form(g, mark_edge(g.order(), p, q)) ==
           canonical_form(g, mark_edge(g.order(), chosen.first, chosen.second));
  }

  template <typename Allowed>
  void extend(std::size_t n, const std::vector<Edge>& edges, Allowed allowed) {
    std::set<CanonicalForm> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!allowed(i, j)) continue;
        Graph child = insert_edge(n, edges, i, j);
        CanonicalForm form;
        if (!accept(child, n, n + 1, form)) continue;
        if (!seen.insert(std::move(form)).second) continue;
        sink(std::move(child));
      }
    }
  }

  void sink(Graph g) {
    if (!last_) {
      levels_[g.order()].push_back(std::move(g));
    } else if (girth(g) >= Girth(min_girth_)) {
      emit_(g);
    }
  }

  // Is xy in the orbit of the canonical reducible edge of g? Fills `form`.
  static bool accept(const Graph& g, Vertex x, Vertex y, CanonicalForm& form) {
    const std::size_t own = edge_invariant(g, x, y);
    std::vector<Edge> best;
    for (const auto& [a, b] : g.edges()) {
      const std::size_t inv = edge_invariant(g, a, b);
      if (inv > own || !reducible(g, a, b)) continue;
      if (inv < own) return false;
      best.emplace_back(a, b);
    }
    const CanonicalResult canon = canonical_labeling(g);
    form = canon.form;
    if (best.size() == 1) return true;
    auto pair = [&](const Edge& e) {
      const Vertex p = canon.labeling[e.first];
      const Vertex q = canon.labeling[e.second];
      return std::make_pair(std::min(p, q), std::max(p, q));
    };
    const Edge chosen = *std::min_element(best.begin(), best.end(),
                                          [&](const Edge& a, const Edge& b) { return pair(a) < pair(b); });
    if (pair(chosen) == pair({x, y})) return true;
    return canonical_form(g, mark_edge(g.order(), x, y)) ==
           canonical_form(g, mark_edge(g.order(), chosen.first, chosen.second));
  }

  std::size_t target_;
  std::size_t min_girth_;
  const std::function<void(const Graph&)>& emit_;
  std::vector<std::vector<Graph>> levels_;
  bool last_ = false;
};

// Multisets of connected components with sizes summing to n, components
// taken in non-decreasing (size, index) order.
void combine(const std::map<std::size_t, std::vector<Graph>>& classes, std::size_t remaining, std::size_t min_size,
             std::size_t min_index, std::vector<const Graph*>& parts, const std::function<void(const Graph&)>& emit) {
  if (remaining == 0) {
    emit(disjoint_union(parts));
    return;
  }
  for (const auto& [size, list] : classes) {
    if (size < min_size || size > remaining) continue;
    for (std::size_t i = size == min_size ? min_index : 0; i < list.size(); ++i) {
      parts.push_back(&list[i]);
      combine(classes, remaining - size, size, i, parts, emit);
      parts.pop_back();
    }
  }
}

}  // namespace

void enumerate_cubic(const EnumSpec& spec, const std::function<void(const Graph&)>& emit) {
  check_spec(spec);
  if (spec.connected_only) {
    Generator(spec.n, spec.min_girth, emit).run();
    return;
  }
  std::map<std::size_t, std::vector<Graph>> classes;
  for (std::size_t m = 4; m <= spec.n; m += 2) {
    EnumSpec part = spec;
    part.n = m;
    part.connected_only = true;
    classes[m] = enumerate_cubic(part);
  }
  std::vector<const Graph*> parts;
  combine(classes, spec.n, 4, 0, parts, emit);
}

std::vector<Graph> enumerate_cubic(const EnumSpec& spec) {
  std::vector<Graph> out;
  enumerate_cubic(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::size_t count_cubic(const EnumSpec& spec) {
  std::size_t count = 0;
  enumerate_cubic(spec, [&](const Graph&) { ++count; });
  return count;
}

namespace {

// Tags of list members on n vertices.
std::vector<std::string> expected_tags(std::size_t n) {
  std::vector<std::string> out;
  for (Sporadic s : all_sporadics()) {
    if (sporadic(s).graph.order() == n) out.push_back(to_string(s));
  }
  if (n % 6 == 0 && n >= 12) out.push_back(Classification{Classification::Kind::XN, Sporadic::Prism, n / 6}.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClassificationReport verify_classification(std::size_t max_n, std::size_t cap,
                                           const std::function<void(const ClassificationRow&)>& progress) {
  if (max_n < 4) throw std::invalid_argument("max_n must be at least 4");
  if (max_n > cap || cap > kHardEnumerationCap) {
    throw std::invalid_argument("max_n = " + std::to_string(max_n) + " is above the enumeration cap");
  }
  ClassificationReport report{{}, {}, true};
  for (std::size_t n = 4; n <= max_n; n += 2) {
    ClassificationRow row{n, 0, {}, 0};
    enumerate_cubic(EnumSpec{n, 3, true, cap}, [&](const Graph& g) {
      ++row.total;
      const bool gap = gap_check(g, open_gap()).has_gap;
      if (gap != is_psd(m_matrix(g))) {
        ++row.equivalence_counterexamples;
        report.failures.push_back("n=" + std::to_string(n) + ": PSD test disagrees with eigenvalue count for " +
                                  to_graph6(g));
      }
      if (gap) row.survivors.push_back(SurvivorRecord{to_graph6(g), classify(g).to_string(), girth(g)});
    });
    std::vector<std::string> found;
    for (const auto& s : row.survivors) {
      found.push_back(s.tag);
      if (s.tag == "NOT_IN_LIST") {
        report.failures.push_back("n=" + std::to_string(n) + ": graph without eigenvalues in (-2, 0) not in the list: " +
                                  s.graph6);
      }
    }
    std::sort(found.begin(), found.end());
    for (const auto& tag : expected_tags(n)) {
      if (std::find(found.begin(), found.end(), tag) == found.end()) {
        report.failures.push_back("n=" + std::to_string(n) + ": " + tag + " missing from the survivors");
      }
    }
    if (std::adjacent_find(found.begin(), found.end()) != found.end()) {
      report.failures.push_back("n=" + std::to_string(n) + ": a listed graph was emitted twice");
    }
    if (progress) progress(row);
    report.per_n.push_back(std::move(row));
  }
  report.ok = report.failures.empty();
  return report;
}

GirthProfile girth_profile(const ClassificationReport& report) {
  std::map<Girth, std::vector<std::string>> by_girth;
  for (Girth g : {Girth(3), Girth(4), Girth(5), Girth(6), Girth(7), Girth(8)}) by_girth[g];
  for (const auto& row : report.per_n) {
    for (const auto& s : row.survivors) by_girth[s.girth].push_back(s.tag);
  }
  auto allowed = [](Girth g, const std::string& tag) {
    if (g == Girth(3)) return tag == "PRISM";
    if (g == Girth(4)) return tag == "K33" || tag.rfind("XN(", 0) == 0;
    if (g == Girth(5)) return tag == "PETERSEN" || tag == "DODECAHEDRON";
    if (g == Girth(8)) return tag == "TUTTE8";
    return false;
  };
  GirthProfile profile{{}, report.failures, report.ok};
  for (auto& [g, tags] : by_girth) {
    for (const auto& tag : tags) {
      if (!allowed(g, tag)) profile.failures.push_back("girth " + g.to_string() + ": unexpected survivor " + tag);
    }
    profile.rows.push_back(GirthProfileRow{g, std::move(tags)});
  }
  profile.ok = profile.failures.empty();
  return profile;
}

GirthProfile girth_profile(std::size_t max_n, std::size_t cap) { return girth_profile(verify_classification(max_n, cap)); }

}  // namespace cubicgap
