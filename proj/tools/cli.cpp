#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <optional>

#include "CLI11.hpp"
#include "cubicgap/cubic_enum.hpp"
#include "cubicgap/errors.hpp"
#include "cubicgap/families.hpp"
#include "cubicgap/gap_certifier.hpp"
#include "cubicgap/local_structure.hpp"
#include "cubicgap/matrix.hpp"
#include "cubicgap/roots.hpp"
#include "json.hpp"

namespace cubicgap::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Graphs from `source`: a graph6 string, or "-" for one per line on `in`.
// Blank lines are skipped; a bad line stops the run with its line number.
void for_each_graph(const std::string& source, std::istream& in, const std::function<void(const Graph&)>& fn) {
  std::size_t line_no = 0;
  std::size_t seen = 0;
  auto handle = [&](std::string line) {
    ++line_no;
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
    if (line.empty()) return;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const Graph6Error& e) {
      throw UsageError("line " + std::to_string(line_no) + ": malformed graph6: " + e.what());
    }
    ++seen;
    fn(g);
  };
  if (source == "-") {
    std::string line;
    while (std::getline(in, line)) handle(line);
  } else {
    handle(source);
  }
  if (seen == 0) throw UsageError("no graphs in input");
}

Json coefficients(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Json eigenvalue_json(const Eigenvalue& e) {
  return Json{{"kind", e.kind == Eigenvalue::Kind::Integer ? "integer" : "sqrt"}, {"a", e.a}, {"b", e.b}};
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, degree(g, v));
  return d;
}

// Eigenvalue counts at each integer in [-d, d] and on the open unit intervals
// between them, d the largest degree (no eigenvalue lies outside).
std::vector<std::pair<Interval, std::size_t>> unit_counts(const IntPolynomial& p, std::size_t d) {
  const RootCounter counter(p);
  std::vector<std::pair<Interval, std::size_t>> out;
  const long top = static_cast<long>(d);
  for (long k = -top; k <= top; ++k) {
    const Interval at = Interval::point(k);
    out.emplace_back(at, counter.count(at, Multiplicity::Counted));
    if (k == top) break;
    const Interval gap = Interval::open(k, k + 1);
    out.emplace_back(gap, counter.count(gap, Multiplicity::Counted));
  }
  return out;
}

void cmd_spectrum(const std::string& source, bool json, std::istream& in, std::ostream& out) {
  for_each_graph(source, in, [&](const Graph& g) {
    const IntPolynomial p = char_poly(IntMatrix::adjacency(g));
    const auto counts = unit_counts(p, max_degree(g));
    std::string tag;
    const SpectrumRecord* record = nullptr;
    if (g.order() > 0 && is_cubic(g) && is_connected(g)) {
      const Classification c = classify(g);
      tag = c.to_string();
      if (c.kind == Classification::Kind::Sporadic) record = &sporadic(c.sporadic).spectrum;
    }
    if (json) {
      Json j{{"graph6", to_graph6(g)}, {"order", g.order()}, {"char_poly", p.to_string()},
             {"coefficients", coefficients(p)}};
      Json rows = Json::array();
      for (const auto& [iv, c] : counts) rows.push_back(Json{{"interval", iv.to_string()}, {"count", c}});
      j["root_counts"] = std::move(rows);
      j["classification"] = tag.empty() ? Json() : Json(tag);
      if (record) {
        Json entries = Json::array();
        for (const auto& e : record->entries) {
          entries.push_back(Json{{"value", eigenvalue_json(e.value)}, {"multiplicity", e.multiplicity}});
        }
        j["spectrum"] = std::move(entries);
      }
      out << j.dump() << '\n';
      return;
    }
    out << to_graph6(g) << "  n=" << g.order() << '\n';
    out << "  char poly: " << p.to_string() << '\n';
    for (const auto& [iv, c] : counts) {
      if (c > 0) out << "  " << std::left << std::setw(10) << iv.to_string() << ' ' << c << '\n';
    }
    if (!tag.empty()) out << "  class: " << tag << '\n';
    if (record) {
      out << "  spectrum:";
      for (const auto& e : record->entries) out << ' ' << e.value.to_string() << '^' << e.multiplicity;
      out << '\n';
    }
  });
}

int cmd_gap(const std::string& source, const std::string& lo, const std::string& hi, bool closed_lo, bool closed_hi,
            bool json, std::istream& in, std::ostream& out) {
  Rational a, b;
  try {
    a = parse_rational(lo);
    b = parse_rational(hi);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a > b) throw UsageError("--lo must not exceed --hi");
  const Interval iv(a, b, !closed_lo, !closed_hi);
  bool all = true;
  for_each_graph(source, in, [&](const Graph& g) {
    const GapVerdict v = gap_check(g, iv);
    all = all && v.has_gap;
    if (json) {
      out << Json{{"graph6", v.graph6},
                  {"interval", v.interval.to_string()},
                  {"eigenvalue_count", v.eigenvalue_count},
                  {"has_gap", v.has_gap}}
                 .dump()
          << '\n';
    } else {
      out << v.graph6 << ' ' << v.interval.to_string() << " eigenvalues=" << v.eigenvalue_count
          << " gap=" << (v.has_gap ? "yes" : "no") << '\n';
    }
  });
  return all ? kExitOk : kExitFailed;
}

void cmd_witness(const std::string& source, std::size_t max_size, bool json, std::istream& in, std::ostream& out) {
  for_each_graph(source, in, [&](const Graph& g) {
    const auto w = find_negative_witness(g, std::min(max_size, g.order()));
    if (!json) {
      out << to_graph6(g);
      if (!w) {
        out << " none\n";
        return;
      }
      out << " T=";
      for (std::size_t i = 0; i < w->subset.size(); ++i) out << (i ? "," : "") << w->subset[i];
      out << " det=" << to_string(w->determinant);
      if (w->implied_interval) out << " interval=" << w->implied_interval->to_string();
      out << '\n';
      return;
    }
    Json j{{"graph6", to_graph6(g)}};
    if (!w) {
      j["witness"] = "none";
    } else {
      Json rows = Json::array();
      for (std::size_t r = 0; r < w->submatrix.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < w->submatrix.size(); ++c) row.push_back(w->submatrix(r, c).get_si());
        rows.push_back(std::move(row));
      }
      j["witness"] = Json{{"subset", w->subset},
                          {"determinant", to_string(w->determinant)},
                          {"submatrix", std::move(rows)},
                          {"implied_interval", w->implied_interval ? Json(w->implied_interval->to_string()) : Json()}};
    }
    out << j.dump() << '\n';
  });
}

void cmd_family(const std::string& name, std::size_t xn, std::ostream& out) {
  if (name.empty() == (xn == 0)) throw UsageError("family needs exactly one of --name and --xn");
  if (!name.empty()) {
    out << to_graph6(sporadic(parse_sporadic(name)).graph) << '\n';
  } else {
    out << to_graph6(build_xn(xn)) << '\n';
  }
}

void cmd_corona5(bool json, std::ostream& out) {
  const auto survivors = enumerate_girth5_extensions();
  if (json) {
    Json list = Json::array();
    for (const auto& m : survivors) list.push_back(Json{{"graph6", to_graph6(m.graph)}, {"core_mask", m.core_mask()}});
    out << Json{{"configurations", std::move(list)}, {"count", survivors.size()}}.dump() << '\n';
    return;
  }
  for (const auto& m : survivors) out << to_graph6(m.graph) << ' ' << m.core_mask() << '\n';
  out << "count " << survivors.size() << '\n';
}

void cmd_enumerate(const EnumSpec& spec, std::ostream& out) {
  enumerate_cubic(spec, [&](const Graph& g) { out << to_graph6(g) << '\n'; });
}

int cmd_verify(std::size_t upto, std::size_t cap, bool profile, bool json, std::ostream& out) {
  const ClassificationReport report = verify_classification(upto, cap);
  std::optional<GirthProfile> girths;
  if (profile) girths = girth_profile(report);
  const bool ok = report.ok && (!girths || girths->ok);
  if (json) {
    Json rows = Json::array();
    for (const auto& row : report.per_n) {
      Json survivors = Json::array();
      for (const auto& s : row.survivors) {
        survivors.push_back(Json{{"graph6", s.graph6}, {"tag", s.tag}, {"girth", s.girth.length()}});
      }
      rows.push_back(Json{{"n", row.n},
                          {"total", row.total},
                          {"survivors", std::move(survivors)},
                          {"equivalence_counterexamples", row.equivalence_counterexamples}});
    }
    Json j{{"per_n", std::move(rows)}, {"ok", ok}, {"failures", report.failures}};
    if (girths) {
      Json g = Json::array();
      for (const auto& r : girths->rows) g.push_back(Json{{"girth", r.girth.length()}, {"tags", r.tags}});
      j["girth_profile"] = std::move(g);
      for (const auto& f : girths->failures) {
        if (std::find(report.failures.begin(), report.failures.end(), f) == report.failures.end()) {
          j["failures"].push_back(f);
        }
      }
    }
    out << j.dump(2) << '\n';
    return ok ? kExitOk : kExitFailed;
  }
  out << std::left << std::setw(4) << "n" << std::setw(8) << "total" << "survivors\n";
  for (const auto& row : report.per_n) {
    out << std::setw(4) << row.n << std::setw(8) << row.total;
    if (row.survivors.empty()) out << '-';
    for (std::size_t i = 0; i < row.survivors.size(); ++i) {
      out << (i ? " " : "") << row.survivors[i].tag << " (" << row.survivors[i].graph6 << ')';
    }
    out << '\n';
  }
  if (girths) {
    out << "girth profile\n";
    for (const auto& r : girths->rows) {
      out << "  " << std::setw(3) << r.girth.to_string();
      if (r.tags.empty()) out << '-';
      for (std::size_t i = 0; i < r.tags.size(); ++i) out << (i ? " " : "") << r.tags[i];
      out << '\n';
    }
  }
  for (const auto& f : report.failures) out << "FAILURE " << f << '\n';
  if (girths) {
    for (const auto& f : girths->failures) {
      if (std::find(report.failures.begin(), report.failures.end(), f) == report.failures.end()) {
        out << "FAILURE " << f << '\n';
      }
    }
  }
  out << (ok ? "ok" : "FAILED") << '\n';
  return ok ? kExitOk : kExitFailed;
}

int cmd_replay(bool json, std::ostream& out) {
  const auto rows = lemma_replay();
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const ReplayRow& r) { return r.match; });
  if (json) {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back(Json{{"id", r.id},
                          {"expected", to_string(r.expected_det)},
                          {"computed", to_string(r.computed_det)},
                          {"host", to_string(r.host_det)},
                          {"match", r.match}});
    }
    out << Json{{"rows", std::move(list)}, {"ok", ok}}.dump(2) << '\n';
    return ok ? kExitOk : kExitFailed;
  }
  std::size_t width = 2;
  for (const auto& r : rows) width = std::max(width, r.id.size());
  out << std::left << std::setw(static_cast<int>(width) + 2) << "id" << std::setw(10) << "expected" << std::setw(10)
      << "computed" << std::setw(10) << "host" << "match\n";
  for (const auto& r : rows) {
    out << std::setw(static_cast<int>(width) + 2) << r.id << std::setw(10) << to_string(r.expected_det)
        << std::setw(10) << to_string(r.computed_det) << std::setw(10) << to_string(r.host_det)
        << (r.match ? "yes" : "NO") << '\n';
  }
  out << rows.size() << " rows, " << (ok ? "all match" : "MISMATCH") << '\n';
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact certification of eigenvalue gaps in cubic graphs", "cubicgap"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  bool json = false;
  std::string source = "-";
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit JSON instead of a table"); };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", source, "graph6 string, or - to read one per line from stdin")->capture_default_str();
  };

  auto* spectrum = app.add_subcommand("spectrum", "Characteristic polynomial and eigenvalue counts per unit interval");
  add_input(spectrum);
  add_json(spectrum);

  std::string lo = "-2";
  std::string hi = "0";
  bool closed_lo = false;
  bool closed_hi = false;
  auto* gap = app.add_subcommand("gap", "Count eigenvalues in an interval; exit 0 iff every graph has none");
  gap->add_option("--lo", lo, "Left end, exact (\"-2\", \"-2561/1000\", \"-2.5\")")->capture_default_str();
  gap->add_option("--hi", hi, "Right end, exact")->capture_default_str();
  gap->add_flag("--closed-lo", closed_lo, "Include the left end");
  gap->add_flag("--closed-hi", closed_hi, "Include the right end");
  add_input(gap);
  add_json(gap);

  std::size_t max_size = 6;
  auto* witness = app.add_subcommand("witness", "First principal submatrix of A(A+2I) with negative determinant");
  witness->add_option("--max-size", max_size, "Largest subset tried")->capture_default_str()->check(CLI::PositiveNumber);
  add_input(witness);
  add_json(witness);

  std::string name;
  std::size_t xn = 0;
  auto* family = app.add_subcommand("family", "Print a graph of the classification list as graph6");
  auto* name_opt = family->add_option("--name", name, "prism, k33, petersen, dodecahedron or tutte8");
  family->add_option("--xn", xn, "The ring X(N) of N gadgets, N >= 2")->excludes(name_opt);

  auto* corona5 = app.add_subcommand("corona5", "The girth-5 corona configurations with PSD M_SS");
  add_json(corona5);

  EnumSpec spec;
  bool disconnected = false;
  auto* enumerate = app.add_subcommand("enumerate", "Stream cubic graphs on N vertices as graph6");
  enumerate->add_option("--n", spec.n, "Number of vertices")->required();
  enumerate->add_option("--min-girth", spec.min_girth, "Smallest girth kept")->capture_default_str();
  enumerate->add_option("--cap", spec.cap, "Largest n allowed (at most 18)")->capture_default_str();
  enumerate->add_flag("--disconnected", disconnected, "Include disconnected graphs");

  std::size_t upto = 0;
  std::size_t cap = kDefaultEnumerationCap;
  bool profile = false;
  auto* verify = app.add_subcommand("verify", "Check the classification on every cubic graph up to N vertices");
  verify->add_option("--upto", upto, "Largest number of vertices")->required();
  verify->add_option("--cap", cap, "Largest n allowed (at most 18)")->capture_default_str();
  verify->add_flag("--girth-profile", profile, "Also group survivors by girth");
  add_json(verify);

  auto* replay = app.add_subcommand("replay", "Recompute the witness determinants of the case analysis");
  add_json(replay);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }

  try {
    if (spectrum->parsed()) {
      cmd_spectrum(source, json, in, out);
      return kExitOk;
    }
    if (gap->parsed()) return cmd_gap(source, lo, hi, closed_lo, closed_hi, json, in, out);
    if (witness->parsed()) {
      cmd_witness(source, max_size, json, in, out);
      return kExitOk;
    }
    if (family->parsed()) {
      cmd_family(name, xn, out);
      return kExitOk;
    }
    if (corona5->parsed()) {
      cmd_corona5(json, out);
      return kExitOk;
    }
    if (enumerate->parsed()) {
      spec.connected_only = !disconnected;
      cmd_enumerate(spec, out);
      return kExitOk;
    }
    if (verify->parsed()) return cmd_verify(upto, cap, profile, json, out);
    if (replay->parsed()) return cmd_replay(json, out);
  } catch (const UsageError& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    out.flush();
    err << "verification failed: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace cubicgap::cli
