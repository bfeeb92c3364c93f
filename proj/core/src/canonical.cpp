#include "cubicgap/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubicgap {

namespace {

using Key = std::vector<std::uint64_t>;

constexpr std::uint64_t kTraceTag = 1;
constexpr std::uint64_t kLeafTag = 2;

class Refiner {
 public:
  explicit Refiner(const Graph& g) : n_(g.order()), offsets_(n_ + 1, 0) {
    for (Vertex v = 0; v < n_; ++v) {
      const auto nb = g.neighbors(v);
      offsets_[v + 1] = offsets_[v] + nb.size();
      adj_.insert(adj_.end(), nb.begin(), nb.end());
    }
    nbr_colors_.resize(adj_.size());
    order_.resize(n_);
  }

  std::size_t order() const { return n_; }
  const std::vector<Vertex>& adjacency() const { return adj_; }
  const std::vector<std::size_t>& offsets() const { return offsets_; }

  /// Splits colour classes by neighbour-colour multisets until stable.
  /// Colours are ranks 0..k-1 and the new ranks depend only on the old ranks
  /// and the graph structure, never on vertex names. Appends a trace.
  std::size_t refine(std::vector<int>& colors, Key& key) {
    std::size_t cells = count_cells(colors);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        auto b = nbr_colors_.begin() + static_cast<long>(offsets_[v]);
        auto e = nbr_colors_.begin() + static_cast<long>(offsets_[v + 1]);
        for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) nbr_colors_[i] = colors[adj_[i]];
        std::sort(b, e);
      }
      std::iota(order_.begin(), order_.end(), 0);
      auto less = [&](Vertex a, Vertex b) { return compare_signature(colors, a, b) < 0; };
      std::sort(order_.begin(), order_.end(), less);
      std::vector<int> next(n_);
      int rank = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && compare_signature(colors, order_[i - 1], order_[i]) != 0) ++rank;
        next[order_[i]] = rank;
      }
      const std::size_t new_cells = n_ == 0 ? 0 : static_cast<std::size_t>(rank) + 1;
      colors.swap(next);
      if (new_cells == cells) break;
      cells = new_cells;
    }
    append_trace(colors, cells, key);
    return cells;
  }

 private:
  static std::size_t count_cells(const std::vector<int>& colors) {
    if (colors.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(colors.begin(), colors.end())) + 1;
  }

  int compare_signature(const std::vector<int>& colors, Vertex a, Vertex b) const {
    if (colors[a] != colors[b]) return colors[a] < colors[b] ? -1 : 1;
    const std::size_t la = offsets_[a + 1] - offsets_[a];
    const std::size_t lb = offsets_[b + 1] - offsets_[b];
    if (la != lb) return la < lb ? -1 : 1;
    for (std::size_t i = 0; i < la; ++i) {
      const int x = nbr_colors_[offsets_[a] + i];
      const int y = nbr_colors_[offsets_[b] + i];
      if (x != y) return x < y ? -1 : 1;
    }
    return 0;
  }

  // Cell sizes and the neighbour-count quotient of the equitable partition,
  // folded into one word. Label-invariant, so collisions only weaken pruning.
  void append_trace(const std::vector<int>& colors, std::size_t cells, Key& key) const {
    std::vector<std::size_t> size(cells, 0);
    std::vector<Vertex> rep(cells, 0);
    for (Vertex v = n_; v-- > 0;) {
      ++size[colors[v]];
      rep[colors[v]] = v;
    }
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ cells;
    auto mix = [&h](std::uint64_t x) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    };
    for (std::size_t c = 0; c < cells; ++c) {
      mix(size[c]);
      const Vertex v = rep[c];
      std::size_t i = offsets_[v];
      const std::size_t end = offsets_[v + 1];
      mix(end - i);
      while (i < end) {
        std::size_t j = i;
        while (j < end && nbr_colors_[j] == nbr_colors_[i]) ++j;
        mix((static_cast<std::uint64_t>(nbr_colors_[i]) << 32) | (j - i));
        i = j;
      }
    }
    key.push_back(kTraceTag);
    key.push_back(h);
  }

  std::size_t n_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adj_;
  std::vector<int> nbr_colors_;
  std::vector<Vertex> order_;
};

class Search {
 public:
  Search(const Graph& g, const Coloring& colors) : refiner_(g), n_(g.order()) {
    if (!colors.empty() && colors.size() != n_) throw std::invalid_argument("coloring size does not match graph");
    initial_ = colors.empty() ? std::vector<int>(n_, 0) : colors;
  }

  CanonicalResult run() {
    // Initial ranks from the supplied colour values.
    std::vector<int> values = initial_;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    std::vector<int> colors(n_);
    for (Vertex v = 0; v < n_; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(values.begin(), values.end(), initial_[v]) - values.begin());
    }
    Key key;
    refiner_.refine(colors, key);
    explore(colors, key);

    CanonicalResult result;
    result.labeling.assign(best_labels_.begin(), best_labels_.end());
    result.form = form_from_labels(best_labels_);
    return result;
  }

 private:
  // Row words of the relabelled graph.
  void append_certificate(const std::vector<int>& labels, Key& key) const {
    const std::size_t words = (n_ + 63) / 64;
    const std::size_t base = key.size();
    key.resize(base + n_ * words, 0);
    const auto& adj = refiner_.adjacency();
    const auto& off = refiner_.offsets();
    for (Vertex v = 0; v < n_; ++v) {
      const auto lv = static_cast<std::size_t>(labels[v]);
      for (std::size_t i = off[v]; i < off[v + 1]; ++i) {
        const auto lu = static_cast<std::size_t>(labels[adj[i]]);
        key[base + lv * words + lu / 64] |= std::uint64_t{1} << (lu % 64);
      }
    }
  }

  CanonicalForm form_from_labels(const std::vector<int>& labels) const {
    CanonicalForm form;
    form.n = n_;
    form.colors.resize(n_);
    for (Vertex v = 0; v < n_; ++v) form.colors[static_cast<std::size_t>(labels[v])] = initial_[v];
    Key rows;
    append_certificate(labels, rows);
    form.rows = std::move(rows);
    return form;
  }

  // -1, 0, 1 comparing key against the same-length prefix of the best key.
  int compare_prefix(const Key& key) const {
    const std::size_t len = std::min(key.size(), best_key_.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (key[i] != best_key_[i]) return key[i] < best_key_[i] ? -1 : 1;
    }
    if (key.size() > best_key_.size()) return 1;
    return 0;
  }

  void explore(const std::vector<int>& colors, const Key& key) {
    if (have_best_ && compare_prefix(key) > 0) return;

    std::vector<std::size_t> cell_size(n_, 0);
    for (Vertex v = 0; v < n_; ++v) ++cell_size[colors[v]];
    int target = -1;
    for (std::size_t c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }

    if (target < 0) {
      Key leaf = key;
      leaf.push_back(kLeafTag);
      append_certificate(colors, leaf);
      if (!have_best_ || leaf < best_key_) {
        best_key_ = std::move(leaf);
        best_labels_ = colors;
        best_inverse_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v) best_inverse_[static_cast<std::size_t>(colors[v])] = v;
        have_best_ = true;
      } else if (leaf == best_key_) {
        std::vector<Vertex> gamma(n_);
        for (Vertex v = 0; v < n_; ++v) gamma[v] = best_inverse_[static_cast<std::size_t>(colors[v])];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }

    std::vector<Vertex> cell;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] == target) cell.push_back(v);
    }
    // Orbits of the automorphisms found so far that fix every individualised
    // vertex; a sibling in the orbit of an explored one gives the same leaves.
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t merged = 0;
    std::vector<Vertex> explored;
    for (Vertex w : cell) {
      for (; merged < automorphisms_.size(); ++merged) {
        const auto& gamma = automorphisms_[merged];
        if (!std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex p) { return gamma[p] == p; })) continue;
        for (Vertex v = 0; v < n_; ++v) {
          const Vertex a = find(v);
          const Vertex b = find(gamma[v]);
          if (a != b) parent[a] = b;
        }
      }
      const Vertex root = find(w);
      if (std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return find(e) == root; })) continue;
      explored.push_back(w);
      std::vector<int> child = colors;
      for (Vertex v = 0; v < n_; ++v) {
        if (child[v] > target || (child[v] == target && v != w)) ++child[v];
      }
      Key child_key = key;
      refiner_.refine(child, child_key);
      prefix_.push_back(w);
      explore(child, child_key);
      prefix_.pop_back();
    }
  }

  Refiner refiner_;
  std::size_t n_;
  std::vector<int> initial_;
  bool have_best_ = false;
  Key best_key_;
  std::vector<int> best_labels_;
  std::vector<Vertex> best_inverse_;
  std::vector<std::vector<Vertex>> automorphisms_;
  std::vector<Vertex> prefix_;
};

}  // namespace

CanonicalResult canonical_labeling(const Graph& g, const Coloring& colors) { return Search(g, colors).run(); }

CanonicalForm canonical_form(const Graph& g, const Coloring& colors) { return canonical_labeling(g, colors).form; }

Graph canonical_graph(const Graph& g, const Coloring& colors) {
  return g.relabeled(canonical_labeling(g, colors).labeling);
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

bool isomorphic(const Graph& a, const Coloring& ca, const Graph& b, const Coloring& cb) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a, ca) == canonical_form(b, cb);
}

}  // namespace cubicgap
