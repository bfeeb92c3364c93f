#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cubicgap/graph.hpp"

namespace cubicgap {

inline constexpr std::size_t kDefaultEnumerationCap = 16;
inline constexpr std::size_t kHardEnumerationCap = 18;

struct EnumSpec {
  std::size_t n = 4;
  std::size_t min_girth = 3;
  bool connected_only = true;
  /// Largest n accepted; may be raised up to kHardEnumerationCap.
  std::size_t cap = kDefaultEnumerationCap;
};

/// Calls `emit` once per isomorphism class of cubic graphs on spec.n vertices
/// with girth >= spec.min_girth, in a fixed order. Connected graphs are grown
/// from K4 by edge insertion (subdivide two edges, join the new vertices),
/// edge insertion between two smaller graphs, and diamond insertion, keeping
/// a child only when the inserted piece is in the orbit of its canonical
/// reducible piece. Disconnected output combines connected classes. Throws
/// std::invalid_argument for odd n, n < 4, min_girth < 3, a cap above
/// kHardEnumerationCap or n above the cap.
void enumerate_cubic(const EnumSpec& spec, const std::function<void(const Graph&)>& emit);
std::vector<Graph> enumerate_cubic(const EnumSpec& spec);
std::size_t count_cubic(const EnumSpec& spec);

struct SurvivorRecord {
  std::string graph6;
  std::string tag;
  Girth girth;
};

struct ClassificationRow {
  std::size_t n;
  std::size_t total;
  std::vector<SurvivorRecord> survivors;
  /// Graphs where the PSD test on M and the eigenvalue count disagree.
  std::size_t equivalence_counterexamples;
};

struct ClassificationReport {
  std::vector<ClassificationRow> per_n;
  std::vector<std::string> failures;
  bool ok;
};

/// Enumerates every connected cubic graph on 4..max_n vertices, keeps those
/// without eigenvalues in (-2, 0) and compares them with the list of five
/// sporadic graphs and X(n). `progress`, when set, is called after each n.
ClassificationReport verify_classification(std::size_t max_n, std::size_t cap = kDefaultEnumerationCap,
                                           const std::function<void(const ClassificationRow&)>& progress = {});

struct GirthProfileRow {
  Girth girth;
  std::vector<std::string> tags;
};

struct GirthProfile {
  std::vector<GirthProfileRow> rows;
  std::vector<std::string> failures;
  bool ok;
};

/// Survivors of verify_classification grouped by girth, with the expected
/// girth pattern checked: only the prism at girth 3, K33 and X(n) at girth 4,
/// only the Petersen graph at girth 5 (for max_n < 20) and nothing at girth 6 or 7.
GirthProfile girth_profile(const ClassificationReport& report);
GirthProfile girth_profile(std::size_t max_n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace cubicgap
