#include "cubicgap/gap_certifier.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "cubicgap/errors.hpp"
#include "cubicgap/roots.hpp"

namespace cubicgap {

Interval open_gap() { return Interval::open(-2, 0); }

IntMatrix m_matrix_product(const Graph& g) {
  const IntMatrix a = IntMatrix::adjacency(g);
  return a * (a + Integer(2) * IntMatrix::identity(g.order()));
}

IntMatrix m_matrix_combinatorial(const Graph& g) {
  const std::size_t n = g.order();
  IntMatrix m(n);
  for (Vertex u = 0; u < n; ++u) {
    m(u, u) = static_cast<unsigned long>(g.degree(u));
    for (Vertex v = u + 1; v < n; ++v) {
      const auto common = common_neighbors(g, u, v).size() + (g.adjacent(u, v) ? 2 : 0);
      m(u, v) = static_cast<unsigned long>(common);
      m(v, u) = m(u, v);
    }
  }
  return m;
}

IntMatrix m_matrix(const Graph& g) {
  IntMatrix product = m_matrix_product(g);
  if (is_cubic(g) && product != m_matrix_combinatorial(g)) {
    throw ContractViolation("M(G) product and neighbourhood formula disagree");
  }
  return product;
}

namespace {

void check_subset(std::size_t n, const VertexSet& t) {
  std::vector<bool> seen(n, false);
  for (Vertex v : t) {
    if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    if (seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " repeated in subset");
    seen[v] = true;
  }
}

IntMatrix submatrix_with_diagonal(const Graph& g, const VertexSet& t, bool diagonal_three) {
  check_subset(g.order(), t);
  IntMatrix m(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    m(i, i) = static_cast<unsigned long>(diagonal_three ? 3 : g.degree(t[i]));
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const auto entry = common_neighbors(g, t[i], t[j]).size() + (g.adjacent(t[i], t[j]) ? 2 : 0);
      m(i, j) = static_cast<unsigned long>(entry);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

}  // namespace

IntMatrix m_submatrix(const Graph& g, const VertexSet& t) { return submatrix_with_diagonal(g, t, false); }

IntMatrix configuration_submatrix(const Graph& config, const VertexSet& t) {
  return submatrix_with_diagonal(config, t, true);
}

GapVerdict gap_check(const Graph& g, const Interval& iv) {
  const IntPolynomial p = char_poly(IntMatrix::adjacency(g));
  const std::size_t count = count_roots_in(p, iv, true);
  return GapVerdict{to_graph6(g), iv, count, count == 0};
}

bool is_psd(const IntMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("is_psd requires a symmetric matrix");
  // det(xI - m) = sum_k (-1)^k e_k x^(n-k); PSD iff every e_k >= 0.
  const IntPolynomial p = char_poly(m);
  const std::size_t n = m.size();
  for (std::size_t k = 0; k <= n; ++k) {
    const int s = sgn(p.coeff(n - k));
    if (s == 0) continue;
    if ((k % 2 == 0) != (s > 0)) return false;
  }
  return true;
}

namespace {

class WitnessSearch {
 public:
  explicit WitnessSearch(const IntMatrix& m) : m_(m), n_(m.size()), links_(n_) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && m(i, j) != 0) links_[i].push_back(j);
      }
    }
  }

  std::optional<std::pair<VertexSet, Integer>> run(std::size_t max_size) {
    for (std::size_t k = 1; k <= max_size; ++k) {
      for (Vertex s = 0; s < n_; ++s) {
        // Every connected k-subset whose least element is s, in lexicographic order.
        sets_.clear();
        VertexSet current{s};
        std::vector<Vertex> extension;
        for (Vertex w : links_[s]) {
          if (w > s) extension.push_back(w);
        }
        grow(current, extension, s, k);
        std::sort(sets_.begin(), sets_.end());
        for (auto& t : sets_) {
          Integer d = det_exact(m_.principal_submatrix(t));
          if (d < 0) return std::make_pair(std::move(t), std::move(d));
        }
      }
    }
    return std::nullopt;
  }

 private:
  // Enumerates each connected set containing `root` (as least element) once.
  void grow(VertexSet& current, std::vector<Vertex> extension, Vertex root, std::size_t k) {
    if (current.size() == k) {
      VertexSet sorted = current;
      std::sort(sorted.begin(), sorted.end());
      sets_.push_back(std::move(sorted));
      return;
    }
    while (!extension.empty()) {
      const Vertex w = extension.back();
      extension.pop_back();
      std::vector<Vertex> next = extension;
      for (Vertex u : links_[w]) {
        if (u <= root) continue;
        if (std::find(current.begin(), current.end(), u) != current.end()) continue;
        if (std::find(next.begin(), next.end(), u) != next.end()) continue;
        // Only neighbours exclusive to w, so each set arises from one path.
        const bool touches_current = std::any_of(current.begin(), current.end(), [&](Vertex c) {
          return std::find(links_[c].begin(), links_[c].end(), u) != links_[c].end();
        });
        if (!touches_current) next.push_back(u);
      }
      current.push_back(w);
      grow(current, std::move(next), root, k);
      current.pop_back();
    }
  }

  const IntMatrix& m_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> links_;
  std::vector<VertexSet> sets_;
};

}  // namespace

std::optional<MinorWitness> find_negative_witness(const IntMatrix& m, std::size_t max_size) {
  if (!m.is_symmetric()) throw std::invalid_argument("find_negative_witness requires a symmetric matrix");
  if (max_size > m.size()) throw std::invalid_argument("max_size exceeds the matrix dimension");
  auto found = WitnessSearch(m).run(max_size);
  if (!found) return std::nullopt;
  MinorWitness w;
  w.subset = std::move(found->first);
  w.determinant = std::move(found->second);
  w.submatrix = m.principal_submatrix(w.subset);
  return w;
}

std::optional<MinorWitness> find_negative_witness(const Graph& g, std::size_t max_size) {
  if (max_size > g.order()) throw std::invalid_argument("max_size exceeds the vertex count");
  auto w = find_negative_witness(m_matrix(g), max_size);
  if (w) w->implied_interval = implied_interval_from_submatrix(w->submatrix, make_rational(1, 1000000));
  return w;
}

Interval implied_interval_from_submatrix(const IntMatrix& msub, const Rational& precision) {
  if (!msub.is_symmetric()) throw std::invalid_argument("implied_interval_from_submatrix requires a symmetric matrix");
  if (msub.size() == 0) throw std::invalid_argument("implied_interval_from_submatrix of an empty matrix");
  if (precision <= 0) throw std::invalid_argument("precision must be positive");
  const IntPolynomial p = char_poly(msub);
  const Rational bound = root_bound(p);
  if (count_roots_in(p, Interval::open(-bound, -1), false) > 0) {
    throw ContractViolation("least eigenvalue of the submatrix is below -1");
  }
  // tau <= tau_hi, so sqrt(1 + tau_hi) bounds sqrt(1 + tau) from above.
  const Interval tau = smallest_root_bracket(p, precision);
  const auto [lo, hi] = sqrt_bounds(1 + tau.hi(), precision);
  (void)lo;
  return Interval::closed(-1 - hi, -1 + hi);
}

namespace {

Graph config(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

// u_i = i and v_i = g + i with each v_i a pendant on u_i.
std::vector<Edge> corona_edges(std::size_t g) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < g; ++i) {
    e.emplace_back(i, (i + 1) % g);
    e.emplace_back(i, g + i);
  }
  return e;
}

std::vector<Edge> with(std::vector<Edge> base, const std::vector<Edge>& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

// The 6-vertex gadget on v_0..v_5 = 0..5.
const std::vector<Edge> kGadget = {{0, 1}, {0, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
const std::vector<Edge> kSquare = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};

LemmaCase make_case(std::string id, long det, const std::vector<std::vector<long>>& rows, Graph host,
                    VertexSet subset) {
  return LemmaCase{std::move(id), Integer(det), IntMatrix::from_rows(rows), std::move(host), std::move(subset)};
}

}  // namespace

std::vector<LemmaCase> lemma_cases() {
  std::vector<LemmaCase> cases;

  // Triangle u, v, w = 0, 1, 2 with third neighbours u', v', w' = 3, 4, 5.
  cases.push_back(make_case("g3_mymat", -3, {{3, 3, 1}, {3, 3, 2}, {1, 2, 3}},
                            config(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}), {1, 2, 5}));

  // 4-cycle u_0..u_3 = 0..3; v_0 = 4 ~ u_0, u_2; v_1 = 5 ~ u_1, u_3; v_01 = 6.
  cases.push_back(make_case("g4_common_nbr_5x5", -8,
                            {{3, 2, 2, 2, 1}, {2, 3, 2, 2, 1}, {2, 2, 3, 1, 2}, {2, 2, 1, 3, 2}, {1, 1, 2, 2, 3}},
                            config(7, with(kSquare, {{0, 4}, {2, 4}, {1, 5}, {3, 5}, {4, 6}, {5, 6}})),
                            {0, 3, 4, 5, 6}));
  cases.push_back(make_case("g4_far_4x4", -3, {{3, 2, 2, 2}, {2, 3, 2, 2}, {2, 2, 3, 0}, {2, 2, 0, 3}},
                            config(6, with(kSquare, {{0, 4}, {2, 4}, {1, 5}, {3, 5}})), {0, 1, 4, 5}));

  // v_0 = 4 ~ u_0, u_2; v_1 = 5 ~ u_1; v_3 = 6 ~ u_3; alpha common neighbours of v_1 and v_3.
  for (long alpha = 0; alpha <= 2; ++alpha) {
    std::vector<Edge> edges = with(kSquare, {{0, 4}, {2, 4}, {1, 5}, {3, 6}});
    for (long k = 0; k < alpha; ++k) {
      edges.emplace_back(5, 7 + k);
      edges.emplace_back(6, 7 + k);
    }
    cases.push_back(make_case("g4_c2_formula(alpha=" + std::to_string(alpha) + ")", -11 - 16 * alpha - 5 * alpha * alpha,
                              {{3, 2, 2, 0}, {2, 3, 0, alpha}, {2, 0, 3, 2}, {0, alpha, 2, 3}},
                              config(static_cast<std::size_t>(7 + alpha), edges), {1, 5, 3, 6}));
  }

  // Corona of the 4-cycle, v_i = 4 + i, with v_0 v_2, v_1 v_3 and the extra edge v_0 v_1.
  cases.push_back(make_case("g4_c1_5x5", -8,
                            {{3, 2, 2, 1, 2}, {2, 3, 2, 1, 2}, {2, 2, 3, 2, 1}, {1, 1, 2, 3, 2}, {2, 2, 1, 2, 3}},
                            config(8, with(corona_edges(4), {{4, 6}, {5, 7}, {4, 5}})), {0, 1, 2, 6, 4}));

  // Gadget v_0..v_5 = 0..5 extended by w_0 = 6 ~ v_4, w_1 = 7 ~ v_5, w_0 w_1,
  // w_2 = 8 ~ w_0 and w_3 = 9 ~ w_1.
  const std::vector<Edge> extended = with(kGadget, {{4, 6}, {5, 7}, {6, 7}, {6, 8}, {7, 9}});
  cases.push_back(make_case("g4_gadget_a", -8,
                            {{3, 2, 2, 1, 1}, {2, 3, 1, 2, 0}, {2, 1, 3, 2, 1}, {1, 2, 2, 3, 1}, {1, 0, 1, 1, 3}},
                            config(10, with(extended, {{0, 8}})), {0, 1, 2, 3, 6}));
  // w_4 = 10 and w_5 = 11 hang off w_2, and w_3 misses w_4.
  cases.push_back(make_case("g4_gadget_b", -8,
                            {{3, 2, 2, 1, 0}, {2, 3, 1, 2, 0}, {2, 1, 3, 2, 1}, {1, 2, 2, 3, 0}, {0, 0, 1, 0, 3}},
                            config(12, with(extended, {{8, 10}, {8, 11}})), {4, 5, 6, 7, 10}));

  // Corona of the 5-cycle, v_i = 5 + i. w_0 = 10 and w_1 = 11 both hang off v_0.
  cases.push_back(make_case("g5_deg1_8x8", -4,
                            {{3, 2, 1, 1, 2, 2, 1, 1},
                             {2, 3, 2, 1, 1, 1, 0, 0},
                             {1, 2, 3, 2, 1, 0, 0, 0},
                             {1, 1, 2, 3, 2, 0, 0, 0},
                             {2, 1, 1, 2, 3, 1, 0, 0},
                             {2, 1, 0, 0, 1, 3, 2, 2},
                             {1, 0, 0, 0, 0, 2, 3, 1},
                             {1, 0, 0, 0, 0, 2, 1, 3}},
                            config(12, with(corona_edges(5), {{5, 10}, {5, 11}})), {0, 1, 2, 3, 4, 5, 10, 11}));
  // v_01 = 10, v_04 = 11, v_23 = 12.
  cases.push_back(make_case("g5_x5x6_7x7", -36,
                            {{3, 2, 1, 1, 0, 0, 0},
                             {2, 3, 0, 2, 0, 1, 0},
                             {1, 0, 3, 0, 2, 0, 0},
                             {1, 2, 0, 3, 0, 0, 0},
                             {0, 0, 2, 0, 3, 0, 1},
                             {0, 1, 0, 0, 0, 3, 2},
                             {0, 0, 0, 0, 1, 2, 3}},
                            config(13, with(corona_edges(5), {{5, 10}, {6, 10}, {5, 11}, {9, 11}, {7, 12}, {8, 12}})),
                            {2, 3, 6, 8, 10, 9, 11}));
  // v_12 = 10, x = 11 ~ v_3, v_4 and y = 12 ~ v_0, v_1, v_4.
  cases.push_back(make_case("g5_x9x11_5x5", -12,
                            {{3, 2, 1, 1, 0}, {2, 3, 2, 0, 1}, {1, 2, 3, 0, 0}, {1, 0, 0, 3, 2}, {0, 1, 0, 2, 3}},
                            config(13, with(corona_edges(5),
                                            {{6, 10}, {7, 10}, {8, 11}, {9, 11}, {5, 12}, {6, 12}, {9, 12}})),
                            {1, 6, 10, 4, 9}));

  // Corona of the 6-cycle, v_i = 6 + i, with v_0 ~ v_3 when alpha = 1 (v_3 is then
  // the common neighbour of u_3 and v_0). det is -12 for alpha = 0 and -48 for alpha = 1.
  for (long alpha = 0; alpha <= 1; ++alpha) {
    const auto edges = alpha == 1 ? with(corona_edges(6), {{6, 9}}) : corona_edges(6);
    cases.push_back(make_case("g6(alpha=" + std::to_string(alpha) + ")", alpha == 0 ? -12 : -48,
                              {{3, 2, 0, 1, 2}, {2, 3, 1, 0, 1}, {0, 1, 3, 2, alpha}, {1, 0, 2, 3, 0}, {2, 1, alpha, 0, 3}},
                              config(12, edges), {0, 1, 3, 4, 6}));
  }

  cases.push_back(make_case("g7_6x6", -16,
                            {{3, 2, 0, 1, 2, 0},
                             {2, 3, 1, 0, 1, 0},
                             {0, 1, 3, 1, 0, 0},
                             {1, 0, 1, 3, 0, 2},
                             {2, 1, 0, 0, 3, 0},
                             {0, 0, 0, 2, 0, 3}},
                            config(14, corona_edges(7)), {0, 1, 3, 5, 7, 12}));

  cases.push_back(make_case("g8_7x7(alpha=0)", -45,
                            {{3, 2, 1, 0, 0, 0, 1},
                             {2, 3, 0, 0, 0, 0, 0},
                             {1, 0, 3, 2, 1, 0, 0},
                             {0, 0, 2, 3, 0, 0, 0},
                             {0, 0, 1, 0, 3, 2, 1},
                             {0, 0, 0, 0, 2, 3, 0},
                             {1, 0, 0, 0, 1, 0, 3}},
                            config(16, corona_edges(8)), {0, 8, 2, 10, 4, 12, 6}));

  cases.push_back(make_case("g9_7x7", -16,
                            {{3, 2, 1, 0, 0, 0, 0},
                             {2, 3, 2, 1, 0, 0, 0},
                             {1, 2, 3, 0, 0, 0, 0},
                             {0, 1, 0, 3, 2, 2, 0},
                             {0, 0, 0, 2, 3, 1, 1},
                             {0, 0, 0, 2, 1, 3, 0},
                             {0, 0, 0, 0, 1, 0, 3}},
                            config(18, corona_edges(9)), {0, 1, 10, 3, 4, 12, 6}));
  return cases;
}

std::vector<ReplayRow> lemma_replay() {
  std::vector<ReplayRow> rows;
  for (const auto& c : lemma_cases()) {
    ReplayRow row{c.id, c.expected_det, det_exact(c.literal), det_exact(configuration_submatrix(c.host, c.subset)),
                  false};
    row.match = row.computed_det == row.expected_det && row.host_det == row.expected_det;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cubicgap
