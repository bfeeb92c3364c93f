// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
// `--extended` adds the optional classification run at 16 vertices.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "cubicgap/canonical.hpp"
#include "cubicgap/cubic_enum.hpp"
#include "cubicgap/families.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/local_structure.hpp"
#include "cubicgap/matrix.hpp"
#include "cubicgap/named_graphs.hpp"
#include "cubicgap/roots.hpp"
#include "oracles.hpp"

using namespace cubicgap;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// prod (x - r)^m over integer roots; (x^2 - 5)^m for the +-sqrt5 pair.
IntPolynomial from_roots(const std::vector<std::pair<long, unsigned>>& roots, unsigned sqrt5 = 0) {
  IntPolynomial p{1};
  for (const auto& [r, m] : roots) p = p * IntPolynomial{-r, 1}.pow(m);
  if (sqrt5 > 0) p = p * IntPolynomial{-5, 0, 1}.pow(sqrt5);
  return p;
}

Outcome sporadic_spectra() {
  struct Case {
    const char* name;
    Graph g;
    IntPolynomial expected;
  };
  const Case cases[] = {
      {"prism", prism_graph(), from_roots({{3, 1}, {1, 1}, {0, 2}, {-2, 2}})},
      {"K33", complete_bipartite(3, 3), from_roots({{3, 1}, {0, 4}, {-3, 1}})},
      {"Petersen", petersen_graph(), from_roots({{3, 1}, {1, 5}, {-2, 4}})},
      {"Tutte 8-cage", tutte_eight_cage(), from_roots({{3, 1}, {2, 9}, {0, 10}, {-2, 9}, {-3, 1}})},
      {"dodecahedron", dodecahedron_graph(), from_roots({{3, 1}, {1, 5}, {0, 4}, {-2, 4}}, 3)},
  };
  for (const auto& c : cases) {
    if (char_poly(IntMatrix::adjacency(c.g)) != c.expected) return fail(std::string(c.name) + " spectrum differs");
  }
  for (Sporadic s : all_sporadics()) {
    if (sporadic(s).spectrum.polynomial() != char_poly(IntMatrix::adjacency(sporadic(s).graph))) {
      return fail(to_string(s) + " stored spectrum differs");
    }
  }
  return {true, "5 graphs, exact"};
}

Outcome replay() {
  const auto rows = lemma_replay();
  std::vector<long> got;
  for (const auto& r : rows) {
    if (!r.match) return fail(r.id + " mismatch");
    got.push_back(r.computed_det.get_si());
  }
  std::vector<long> printed = {-3, -8, -3, -11, -32, -63, -8, -8, -8, -4, -36, -12, -48, -12, -16, -45, -16};
  std::sort(got.begin(), got.end());
  std::sort(printed.begin(), printed.end());
  if (got != printed) return fail("determinants differ from the printed list");
  return {true, std::to_string(rows.size()) + " determinants"};
}

MarkedGraph face_configuration(const Graph& g) {
  return tilde_subgraph(g, corona_of_cycle(g, cycles_of_length(g, 5).front()).vertices());
}

Outcome girth5() {
  const auto survivors = enumerate_girth5_extensions();
  if (survivors.size() != 13) return fail(std::to_string(survivors.size()) + " survivors");
  std::set<CanonicalForm> colored;
  std::set<CanonicalForm> plain;
  for (const auto& m : survivors) {
    colored.insert(colored_canonical_form(m));
    plain.insert(canonical_form(m.graph));
  }
  if (colored.size() != 13 || plain.size() != 13) return fail("survivors not pairwise non-isomorphic");
  for (const Graph& host : {petersen_graph(), dodecahedron_graph()}) {
    const MarkedGraph face = face_configuration(host);
    const auto hits = std::count_if(survivors.begin(), survivors.end(),
                                    [&](const MarkedGraph& m) { return colored_isomorphic(m, face); });
    if (hits != 1) return fail("host configuration matched " + std::to_string(hits) + " survivors");
  }
  return {true, "13 survivors, Petersen and dodecahedron present"};
}

Outcome xn_identity() {
  for (std::size_t n = 2; n <= 12; ++n) {
    if (!xn_charpoly_identity_check(n)) return fail("identity fails at n=" + std::to_string(n));
  }
  const IntPolynomial quad{-4, 1, 1};
  const Rational tol = make_rational(1, 1000000000);
  for (std::size_t n = 2; n <= 50; ++n) {
    const XnGapReport r = xn_gap_report(n);
    if (!r.all_clear) return fail("X(" + std::to_string(n) + ") has an eigenvalue in a gap interval");
    // Left end within 1e-9 below the lower root, right end within 1e-9 above the upper root.
    const Rational lo = r.intervals[1].counted.hi();
    const Rational hi = r.intervals[2].counted.lo();
    if (quad.sign_at(lo) <= 0 || quad.sign_at(lo + tol) >= 0 || quad.sign_at(hi) <= 0 ||
        quad.sign_at(hi - tol) >= 0 || lo > -2 || hi < 0) {
      return fail("bracket not within 1e-9 at n=" + std::to_string(n));
    }
  }
  return {true, "identity n=2..12, gaps n=2..50"};
}

Outcome quantitative_girth3() {
  const IntMatrix mymat = IntMatrix::from_rows({{3, 3, 1}, {3, 3, 2}, {1, 2, 3}});
  const IntPolynomial cubic{3, 13, -9, 1};
  if (char_poly(mymat) != cubic) return fail("matrix does not give x^3 - 9x^2 + 13x + 3");
  const Rational eps = make_rational(1, 1000000);
  // The printed value is rounded to 6 places, so bracket to 1e-7 and require
  // both ends within 1e-6 of it.
  const Interval b = smallest_root_bracket(cubic, eps / 10);
  const Rational target = make_rational(-201912, 1000000);
  if (abs(b.lo() - target) > eps || abs(b.hi() - target) > eps) {
    return fail("root bracket " + b.to_string());
  }
  const Interval iv = implied_interval_from_submatrix(mymat, eps);
  const Rational lo = make_rational(-1893358, 1000000);
  const Rational hi = make_rational(-106642, 1000000);
  const Rational tol = make_rational(1, 100000);
  if (!(iv.lo() <= lo && iv.lo() >= lo - tol && iv.hi() >= hi && iv.hi() <= hi + tol)) {
    return fail("interval " + iv.to_string());
  }
  return {true, "tau in " + b.to_string() + ", interval " + iv.to_string()};
}

Outcome classification(std::size_t max_n) {
  const ClassificationReport report = verify_classification(max_n, std::max(max_n, kDefaultEnumerationCap));
  if (!report.ok) return fail(report.failures.front());
  const std::map<std::size_t, std::vector<std::string>> expected = {
      {4, {}}, {6, {"K33", "PRISM"}}, {8, {}}, {10, {"PETERSEN"}}, {12, {"XN(2)"}}, {14, {}}, {16, {}}};
  for (const auto& row : report.per_n) {
    std::vector<std::string> tags;
    for (const auto& s : row.survivors) tags.push_back(s.tag);
    std::sort(tags.begin(), tags.end());
    if (tags != expected.at(row.n)) return fail("unexpected survivors at n=" + std::to_string(row.n));
    if (row.n <= 10 && row.total != oracle::connected_cubic_classes(row.n).size()) {
      return fail("enumerator total differs from the oracle at n=" + std::to_string(row.n));
    }
  }
  std::string totals;
  for (const auto& row : report.per_n) totals += (totals.empty() ? "" : ",") + std::to_string(row.total);
  return {true, "totals " + totals};
}

Outcome equivalence() {
  std::size_t checked = 0;
  for (std::size_t n = 4; n <= 12; n += 2) {
    for (const Graph& g : enumerate_cubic(EnumSpec{n})) {
      ++checked;
      if (gap_check(g, open_gap()).has_gap != is_psd(m_matrix(g))) return fail("counterexample " + to_graph6(g));
    }
  }
  return {true, std::to_string(checked) + " graphs, 0 counterexamples"};
}

std::string cli_output(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out;
  std::ostringstream err;
  cli::run(args, in, out, err);
  return out.str() + err.str();
}

Outcome determinism() {
  for (const auto& args : {std::vector<std::string>{"corona5", "--json"},
                           std::vector<std::string>{"verify", "--upto", "14", "--json"}}) {
    const std::string first = cli_output(args);
    if (first.empty()) return fail("no output from " + args.front());
    if (cli_output(args) != first) return fail(args.front() + " output differs between runs");
  }
  return {true, "corona5 and verify --upto 14 byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  const bool extended = argc > 1 && std::string(argv[1]) == "--extended";
  struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> criteria = {
      {1, "sporadic spectra", 1, sporadic_spectra},
      {2, "witness determinant replay", 1, replay},
      {3, "girth-5 configurations", 60, girth5},
      {4, "X(n) identity and gap intervals", 300, xn_identity},
      {5, "quantitative girth-3 bounds", 1, quantitative_girth3},
      {6, "classification up to 14 vertices", 600, [] { return classification(14); }},
      {7, "PSD test equals eigenvalue count, n <= 12", 600, equivalence},
      {8, "deterministic output", 1200, determinism},
  };
  if (extended) criteria.push_back({6, "classification up to 16 vertices (extended)", 1800, [] { return classification(16); }});

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_seconds) o = fail("took longer than " + std::to_string(c.budget_seconds) + " s");
    all = all && o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  (" << o.detail << "; "
         << secs << " s)";
    std::cout << line.str() << std::endl;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << std::endl;
  return all ? 0 : 1;
}
