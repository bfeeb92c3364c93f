#include "cubicgap/local_structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cubicgap/errors.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/named_graphs.hpp"

namespace cubicgap {

VertexSet Corona::vertices() const {
  VertexSet out = cycle;
  for (Vertex v : pendants) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

std::vector<Edge> Corona::edges() const {
  std::vector<Edge> out;
  const std::size_t g = cycle.size();
  for (std::size_t i = 0; i < g; ++i) out.emplace_back(cycle[i], cycle[(i + 1) % g]);
  for (std::size_t i = 0; i < g; ++i) out.emplace_back(cycle[i], pendants[i]);
  return out;
}

Coloring MarkedGraph::coloring() const {
  Coloring c(graph.order(), 1);
  for (Vertex v : core) c[v] = 0;
  return c;
}

std::string MarkedGraph::core_mask() const {
  std::string mask(graph.order(), '0');
  for (Vertex v : core) mask[v] = '1';
  return mask;
}

namespace {

std::vector<bool> membership(const Graph& g, const VertexSet& s) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : s) {
    if (v >= g.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (in[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated in set");
    in[v] = true;
  }
  return in;
}

}  // namespace

VertexSet strong_open_neighbourhood(const Graph& g, const VertexSet& s) {
  const auto in = membership(g, s);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(v)) hits += in[w] ? 1 : 0;
    if (hits >= 2) out.push_back(v);
  }
  return out;
}

MarkedGraph tilde_subgraph(const Graph& g, const VertexSet& s) {
  const auto in = membership(g, s);
  const VertexSet ext = strong_open_neighbourhood(g, s);
  std::vector<Vertex> label(g.order(), g.order());
  for (std::size_t i = 0; i < s.size(); ++i) label[s[i]] = i;
  for (std::size_t i = 0; i < ext.size(); ++i) label[ext[i]] = s.size() + i;

  MarkedGraph mg;
  mg.graph = Graph(s.size() + ext.size());
  for (const auto& [a, b] : g.edges()) {
    if (!in[a] && !in[b]) continue;
    if (label[a] == g.order() || label[b] == g.order()) continue;
    mg.graph.add_edge(label[a], label[b]);
  }
  for (std::size_t i = 0; i < s.size(); ++i) mg.core.push_back(i);
  for (std::size_t i = 0; i < ext.size(); ++i) mg.external.push_back(s.size() + i);
  return mg;
}

Corona corona_of_cycle(const Graph& g, const VertexSet& cycle) {
  if (!is_cubic(g)) throw std::invalid_argument("corona requires a cubic graph");
  const std::size_t k = cycle.size();
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  const auto on_cycle = membership(g, cycle);
  for (std::size_t i = 0; i < k; ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) {
      throw std::invalid_argument("consecutive vertices " + std::to_string(cycle[i]) + " and " +
                                  std::to_string(cycle[(i + 1) % k]) + " are not adjacent");
    }
  }
  if (girth(g) != Girth(k)) throw std::invalid_argument("cycle length differs from the girth");
  Corona c{g, cycle, {}};
  for (Vertex u : cycle) {
    VertexSet off;
    for (Vertex w : g.neighbors(u)) {
      if (!on_cycle[w]) off.push_back(w);
    }
    if (off.size() != 1) {
      throw std::invalid_argument("vertex " + std::to_string(u) + " has " + std::to_string(off.size()) +
                                  " neighbours off the cycle");
    }
    c.pendants.push_back(off.front());
  }
  return c;
}

std::vector<VertexSet> cycles_of_length(const Graph& g, std::size_t k) {
  std::vector<VertexSet> out;
  if (k < 3) return out;
  std::vector<bool> used(g.order(), false);
  VertexSet path;
  // Paths from the least vertex s through vertices above s only.
  auto extend = [&](auto&& self, Vertex s) -> void {
    const Vertex last = path.back();
    if (path.size() == k) {
      if (g.adjacent(last, s) && path[1] < last) out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || used[w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self, s);
      path.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 0; s < g.order(); ++s) {
    path = {s};
    used[s] = true;
    extend(extend, s);
    used[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CanonicalForm colored_canonical_form(const MarkedGraph& mg) { return canonical_form(mg.graph, mg.coloring()); }

bool colored_isomorphic(const MarkedGraph& a, const MarkedGraph& b) {
  if (a.graph.order() != b.graph.order() || a.core.size() != b.core.size()) return false;
  return isomorphic(a.graph, a.coloring(), b.graph, b.coloring());
}

IntMatrix m_ss_from_marked(const MarkedGraph& mg) { return configuration_submatrix(mg.graph, mg.core); }

namespace {

constexpr std::size_t kCycle = 5;
constexpr std::size_t kCore = 2 * kCycle;

Vertex pendant(std::size_t i) { return kCycle + i % kCycle; }

// Pendant-pendant edges allowed by girth 5: only v_i v_{i+2}, since v_i v_{i+1}
// closes a 4-cycle through u_i u_{i+1}.
std::vector<Edge> diagonal_pairs() {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < kCycle; ++i) out.emplace_back(pendant(i), pendant(i + 2));
  return out;
}

// Neighbour sets (pendants) that an external vertex may have.
std::vector<VertexSet> attachment_sets() {
  std::vector<VertexSet> out;
  for (std::size_t a = 0; a < kCycle; ++a) {
    for (std::size_t b = a + 1; b < kCycle; ++b) {
      out.push_back({pendant(a), pendant(b)});
      for (std::size_t c = b + 1; c < kCycle; ++c) out.push_back({pendant(a), pendant(b), pendant(c)});
    }
  }
  return out;
}

class Girth5Enumerator {
 public:
  Girth5Enumerator() : diagonals_(diagonal_pairs()), attachments_(attachment_sets()) {}

  std::vector<MarkedGraph> run() {
    for (unsigned mask = 0; mask < (1u << diagonals_.size()); ++mask) {
      std::vector<int> spare(kCore, 0);
      for (std::size_t i = 0; i < kCycle; ++i) spare[pendant(i)] = 2;
      std::vector<Edge> internal;
      bool ok = true;
      for (std::size_t d = 0; d < diagonals_.size(); ++d) {
        if ((mask >> d & 1u) == 0) continue;
        internal.push_back(diagonals_[d]);
        ok = ok && --spare[diagonals_[d].first] >= 0 && --spare[diagonals_[d].second] >= 0;
      }
      if (!ok) continue;
      std::vector<std::size_t> chosen;
      attach(internal, chosen, 0, spare);
    }
    std::vector<MarkedGraph> out;
    for (auto& [form, mg] : found_) out.push_back(std::move(mg));
    return out;
  }

 private:
  void attach(const std::vector<Edge>& internal, std::vector<std::size_t>& chosen, std::size_t from,
              std::vector<int>& spare) {
    record(internal, chosen);
    for (std::size_t i = from; i < attachments_.size(); ++i) {
      const VertexSet& set = attachments_[i];
      if (!std::all_of(set.begin(), set.end(), [&](Vertex v) { return spare[v] > 0; })) continue;
      for (Vertex v : set) --spare[v];
      chosen.push_back(i);
      attach(internal, chosen, i + 1, spare);
      chosen.pop_back();
      for (Vertex v : set) ++spare[v];
    }
  }

  void record(const std::vector<Edge>& internal, const std::vector<std::size_t>& chosen) {
    MarkedGraph mg;
    mg.graph = corona_product_cycle(kCycle);
    for (const auto& [a, b] : internal) mg.graph.add_edge(a, b);
    Graph g(kCore + chosen.size());
    for (const auto& [a, b] : mg.graph.edges()) g.add_edge(a, b);
    for (std::size_t j = 0; j < chosen.size(); ++j) {
      for (Vertex v : attachments_[chosen[j]]) g.add_edge(kCore + j, v);
    }
    if (girth(g) < Girth(5)) return;
    mg.graph = std::move(g);
    for (Vertex v = 0; v < kCore; ++v) mg.core.push_back(v);
    for (std::size_t j = 0; j < chosen.size(); ++j) mg.external.push_back(kCore + j);
    auto form = colored_canonical_form(mg);
    found_.try_emplace(std::move(form), std::move(mg));
  }

  std::vector<Edge> diagonals_;
  std::vector<VertexSet> attachments_;
  std::map<CanonicalForm, MarkedGraph> found_;
};

}  // namespace

std::vector<MarkedGraph> girth5_candidates() { return Girth5Enumerator().run(); }

std::vector<MarkedGraph> enumerate_girth5_extensions() {
  std::vector<MarkedGraph> out;
  for (auto& mg : girth5_candidates()) {
    if (is_psd(m_ss_from_marked(mg))) out.push_back(std::move(mg));
  }
  return out;
}

std::string to_string(Girth5Endgame tag) {
  switch (tag) {
    case Girth5Endgame::Petersen:
      return "PETERSEN";
    case Girth5Endgame::Dodecahedron:
      return "DODECAHEDRON";
    case Girth5Endgame::Inconsistent:
      break;
  }
  return "INCONSISTENT";
}

namespace {

MarkedGraph face_configuration(const Graph& g) {
  const auto cycles = cycles_of_length(g, 5);
  const Corona c = corona_of_cycle(g, cycles.front());
  return tilde_subgraph(g, c.vertices());
}

}  // namespace

Girth5Endgame verify_girth5_endgame(const Graph& g) {
  if (!is_cubic(g)) throw std::invalid_argument("endgame requires a cubic graph");
  if (girth(g) != Girth(5)) throw std::invalid_argument("endgame requires girth 5");
  if (!gap_check(g, open_gap()).has_gap) throw std::invalid_argument("graph has an eigenvalue in (-2, 0)");

  // The two survivors that occur: the full Petersen graph and the dodecahedron face neighbourhood.
  static const std::vector<CanonicalForm> allowed = [] {
    std::vector<CanonicalForm> forms{colored_canonical_form(face_configuration(petersen_graph())),
                                     colored_canonical_form(face_configuration(dodecahedron_graph()))};
    std::vector<CanonicalForm> survivors;
    for (const auto& mg : enumerate_girth5_extensions()) survivors.push_back(colored_canonical_form(mg));
    for (const auto& f : forms) {
      if (std::find(survivors.begin(), survivors.end(), f) == survivors.end()) {
        throw ContractViolation("known girth-5 configuration missing from the survivors");
      }
    }
    return forms;
  }();

  for (const auto& cycle : cycles_of_length(g, 5)) {
    const Corona c = corona_of_cycle(g, cycle);
    const CanonicalForm f = colored_canonical_form(tilde_subgraph(g, c.vertices()));
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) return Girth5Endgame::Inconsistent;
  }
  if (isomorphic(g, petersen_graph())) return Girth5Endgame::Petersen;
  if (isomorphic(g, dodecahedron_graph())) return Girth5Endgame::Dodecahedron;
  return Girth5Endgame::Inconsistent;
}

}  // namespace cubicgap
