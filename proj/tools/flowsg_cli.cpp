// flowsg: defect group structure, brute-force oracle, and complexity
// bounds for flow semigroups of finite graphs and digraphs.
//
// Exit codes: 0 success, 1 check mismatch, 2 usage/parse error,
//             3 oracle cap exceeded.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "flowsg/flowsg.hpp"

namespace {

using namespace flowsg;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::size_t default_cap() {
  if (const char* env = std::getenv("FLOWSG_ORACLE_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed FLOWSG_ORACLE_CAP\n";
  }
  return kDefaultClosureCap;
}

std::variant<Graph, Digraph> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

std::vector<int> parse_defect_set(const std::string& csv,
                                  const std::vector<std::string>& labels) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto it = std::find(labels.begin(), labels.end(), item);
    if (it == labels.end())
      throw std::invalid_argument("unknown vertex in defect set: " + item);
    out.push_back(static_cast<int>(it - labels.begin()));
  }
  return out;
}

// per-component defect choice for a digraph under a uniform requested k:
// clamp into [1, |component|-1], skip singletons
std::map<int, int> clamped_choice(const SccDecomposition& scc, int k) {
  std::map<int, int> choice;
  for (std::size_t i = 0; i < scc.components.size(); ++i) {
    int sz = static_cast<int>(scc.components[i].size());
    if (sz >= 2)
      choice[static_cast<int>(i)] = std::clamp(k, 1, sz - 1);
  }
  return choice;
}

struct AnalyzeOptions {
  std::string file;
  int defect = 0;  // 0 = all
  bool all_defects = false;
  bool json = false;
  bool text = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  auto input = load(opt.file);
  AnalysisReport report;
  report.name = stem_of(opt.file);

  std::vector<int> ks;
  std::vector<std::string> labels;

  if (std::holds_alternative<Graph>(input)) {
    const auto& g = std::get<Graph>(input);
    labels = g.labels();
    report.n = g.n();
    report.edge_count = g.edge_count();
    report.directed = false;
    if (opt.all_defects || opt.defect == 0)
      for (int k = 1; k < g.n(); ++k) ks.push_back(k);
    else
      ks.push_back(opt.defect);
    for (int k : ks) {
      if (k < 1 || k >= g.n())
        throw std::invalid_argument("defect size out of range");
      report.defect_groups.push_back(
          make_report_group(defect_structure(g, k), labels));
    }
    report.complexity = make_report_complexity(complexity_bounds(g));
  } else {
    const auto& d = std::get<Digraph>(input);
    labels = d.labels();
    report.n = d.n();
    report.edge_count = d.edge_count();
    report.directed = true;
    auto scc = strongly_connected_components(d);
    int max_k = 1;
    for (const auto& c : scc.components)
      max_k = std::max(max_k, static_cast<int>(c.size()) - 1);
    if (opt.all_defects || opt.defect == 0)
      for (int k = 1; k <= max_k; ++k) ks.push_back(k);
    else
      ks.push_back(opt.defect);
    for (int k : ks) {
      auto analysis = digraph_structure(d, clamped_choice(scc, k));
      analysis.k = k;
      report.defect_groups.push_back(make_report_group(analysis, labels));
    }
  }
  report.timing_ms = ms_since(t0);

  if (opt.json) {
    std::cout << to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "input: " << report.name << " ("
            << (report.directed ? "digraph" : "graph") << ", n=" << report.n
            << ", edges=" << report.edge_count << ")\n";
  for (const auto& g : report.defect_groups) {
    std::cout << "G_" << g.k << " ≅ " << g.descriptor << " (order "
              << g.order << ")\n";
    for (const auto& e : g.evidence) {
      std::cout << "  {";
      for (std::size_t i = 0; i < e.part.size(); ++i)
        std::cout << (i ? "," : "") << e.part[i];
      std::cout << "}: " << e.rule << "\n";
    }
  }
  if (report.complexity) {
    ComplexityBounds b{report.complexity->lower, report.complexity->upper,
                       report.complexity->exact, report.complexity->rules};
    std::cout << render_complexity(b) << "\n";
  }
  return kExitOk;
}

int run_oracle(const std::string& file, int k, const std::string& defect_csv,
               std::size_t cap, bool json) {
  auto t0 = std::chrono::steady_clock::now();
  auto input = load(file);
  const std::vector<std::string>& labels =
      std::holds_alternative<Graph>(input) ? std::get<Graph>(input).labels()
                                           : std::get<Digraph>(input).labels();
  int n = static_cast<int>(labels.size());
  std::vector<int> defect;
  if (!defect_csv.empty()) {
    defect = parse_defect_set(defect_csv, labels);
    if (static_cast<int>(defect.size()) != k && k != 0)
      throw std::invalid_argument("--defect-set size disagrees with --defect");
  } else {
    if (k < 1 || k >= n)
      throw std::invalid_argument("defect size out of range");
    defect.resize(k);
    std::iota(defect.begin(), defect.end(), 0);
  }

  ConcreteGroup gr = std::holds_alternative<Graph>(input)
                         ? defect_group_oracle(std::get<Graph>(input), defect,
                                               cap)
                         : defect_group_oracle(std::get<Digraph>(input),
                                               defect, cap);
  auto analysis = identify_concrete(gr);

  OracleSummary os;
  os.k = static_cast<int>(defect.size());
  for (int v : defect) os.defect_set.push_back(labels[v]);
  for (int p : gr.points) os.points.push_back(labels[p]);
  os.order = gr.order();
  for (const auto& o : analysis.orbits)
    os.orbit_sizes.push_back(static_cast<int>(o.points.size()));
  std::sort(os.orbit_sizes.begin(), os.orbit_sizes.end());
  os.classification = classify_string(analysis, labels);

  if (json) {
    AnalysisReport report;
    report.name = stem_of(file);
    report.n = n;
    report.edge_count = std::holds_alternative<Graph>(input)
                            ? std::get<Graph>(input).edge_count()
                            : std::get<Digraph>(input).edge_count();
    report.directed = std::holds_alternative<Digraph>(input);
    report.oracle = os;
    report.timing_ms = ms_since(t0);
    std::cout << to_json(report).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "defect set {";
  for (std::size_t i = 0; i < os.defect_set.size(); ++i)
    std::cout << (i ? "," : "") << os.defect_set[i];
  std::cout << "}\norder " << os.order << "\norbit sizes [";
  for (std::size_t i = 0; i < os.orbit_sizes.size(); ++i)
    std::cout << (i ? ", " : "") << os.orbit_sizes[i];
  std::cout << "]\n" << os.classification << "\n";
  return kExitOk;
}

// one graph fixture, every k: structural vs oracle
bool check_graph(const std::string& name, const Graph& g, std::size_t cap,
                 bool all_defect_sets, std::ostream& out) {
  bool ok = true;
  auto s = flow_semigroup(g, cap);
  for (int k = 1; k < g.n(); ++k) {
    auto analysis = defect_structure(g, k);
    std::vector<int> defect(k);
    std::iota(defect.begin(), defect.end(), 0);
    auto gr = defect_group_from_closure(s, defect, g.n());
    auto m = matches(analysis.descriptor, gr);
    out << name << " k=" << k << " " << (m.ok ? "OK " : "MISMATCH ")
        << m.report << "\n";
    if (!m.ok) {
      ok = false;
      out << "  counterexample: n=" << g.n() << " edges={";
      for (auto [u, v] : g.edges())
        out << " " << g.label(u) << "-" << g.label(v);
      out << " } k=" << k << " defect={";
      for (int v : defect) out << " " << g.label(v);
      out << " }\n";
    }
    if (all_defect_sets) {
      // defect-set independence: order and orbit sizes across all subsets
      std::set<std::uint64_t> orders;
      std::set<std::vector<int>> orbits;
      std::vector<int> picks(g.n(), 0);
      std::fill(picks.end() - k, picks.end(), 1);
      do {
        std::vector<int> ds;
        for (int v = 0; v < g.n(); ++v)
          if (picks[v]) ds.push_back(v);
        auto gd = defect_group_from_closure(s, ds, g.n());
        orders.insert(gd.order());
        auto ga = identify_concrete(gd);
        std::vector<int> sizes;
        for (const auto& o : ga.orbits)
          sizes.push_back(static_cast<int>(o.points.size()));
        std::sort(sizes.begin(), sizes.end());
        orbits.insert(sizes);
      } while (std::next_permutation(picks.begin(), picks.end()));
      bool indep = orders.size() == 1 && orbits.size() == 1;
      out << name << " k=" << k << " defect-set independence "
          << (indep ? "OK" : "VIOLATED") << "\n";
      if (!indep) ok = false;
    }
  }
  return ok;
}

bool check_digraph(const std::string& name, const Digraph& d, std::size_t cap,
                   bool all_defect_sets, std::ostream& out) {
  bool ok = true;
  auto scc = strongly_connected_components(d);
  // each non-singleton component reduces to its direction-forgotten graph
  for (std::size_t i = 0; i < scc.components.size(); ++i) {
    const auto& comp = scc.components[i];
    if (comp.size() < 2) continue;
    std::vector<int> to_sub(d.n(), -1);
    for (std::size_t j = 0; j < comp.size(); ++j)
      to_sub[comp[j]] = static_cast<int>(j);
    std::vector<std::string> labels;
    for (int v : comp) labels.push_back(d.label(v));
    std::vector<std::pair<int, int>> sub_edges;
    for (auto [u, v] : d.edges())
      if (to_sub[u] >= 0 && to_sub[v] >= 0)
        sub_edges.emplace_back(to_sub[u], to_sub[v]);
    auto forgotten =
        forget_directions(Digraph(std::move(labels), std::move(sub_edges)));
    ok &= check_graph(name + "/scc" + std::to_string(i), forgotten, cap,
                      all_defect_sets, out);
  }
  // whole-digraph product check with one defect vertex per component
  bool has_multi = false;
  std::map<int, int> choice;
  std::vector<int> defect;
  for (std::size_t i = 0; i < scc.components.size(); ++i)
    if (scc.components[i].size() >= 2) {
      has_multi = true;
      choice[static_cast<int>(i)] = 1;
      defect.push_back(scc.components[i][0]);
    }
  if (has_multi) {
    auto analysis = digraph_structure(d, choice);
    auto gr = defect_group_oracle(d, defect, cap);
    auto m = matches(analysis.descriptor, gr);
    out << name << " product(k_i=1) " << (m.ok ? "OK " : "MISMATCH ")
        << m.report << "\n";
    ok &= m.ok;
  } else {
    out << name << " all components singleton: trivial OK\n";
  }
  return ok;
}

int run_check(const std::string& file, const std::string& corpus, int max_n,
              bool all_defect_sets, std::size_t cap) {
  std::vector<std::string> files;
  if (!corpus.empty()) {
    for (const auto& entry : std::filesystem::directory_iterator(corpus))
      if (entry.path().extension() == ".edges")
        files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(file);
  }
  bool all_ok = true;
  for (const auto& f : files) {
    auto input = load(f);
    int n = std::holds_alternative<Graph>(input)
                ? std::get<Graph>(input).n()
                : std::get<Digraph>(input).n();
    if (n > max_n) {
      std::cout << stem_of(f) << " skipped (n=" << n << " > max-n=" << max_n
                << ")\n";
      continue;
    }
    if (std::holds_alternative<Graph>(input)) {
      const auto& g = std::get<Graph>(input);
      if (!is_connected(g)) {
        std::cout << stem_of(f) << " skipped (disconnected)\n";
        continue;
      }
      all_ok &= check_graph(stem_of(f), g, cap, all_defect_sets, std::cout);
    } else {
      all_ok &= check_digraph(stem_of(f), std::get<Digraph>(input), cap,
                              all_defect_sets, std::cout);
    }
  }
  std::cout << (all_ok ? "all checks passed" : "CHECK FAILURES") << "\n";
  return all_ok ? kExitOk : kExitMismatch;
}

int run_membership(const std::string& file, const std::string& a,
                   const std::string& b) {
  auto input = load(file);
  if (!std::holds_alternative<Digraph>(input))
    throw std::invalid_argument("membership requires a digraph input");
  const auto& d = std::get<Digraph>(input);
  int ia = d.index_of(a), ib = d.index_of(b);
  auto r = collapsing_membership(d, ia, ib);
  if (!r.member) {
    std::cout << "e[" << a << ">" << b << "] is not in the flow semigroup\n";
    return kExitOk;
  }
  std::cout << "e[" << a << ">" << b << "] is in the flow semigroup\n";
  if (r.witness) {
    std::cout << "witness: " << r.witness->to_string(d.labels()) << "\n";
    r.witness->validate(d);
    auto t = r.witness->evaluate(d.n());
    bool exact = t == detail::collapsing(d.n(), ia, ib);
    std::cout << "witness evaluates to e[" << a << ">" << b << "]: "
              << (exact ? "verified" : "MISMATCH") << "\n";
    if (!exact) return kExitMismatch;
  } else {
    std::cout << "direct edge\n";
  }
  return kExitOk;
}

int run_complexity(const std::string& file, bool json) {
  auto input = load(file);
  if (std::holds_alternative<Graph>(input)) {
    const auto& g = std::get<Graph>(input);
    auto b = complexity_bounds(g);
    if (json) {
      AnalysisReport report;
      report.name = stem_of(file);
      report.n = g.n();
      report.edge_count = g.edge_count();
      report.complexity = make_report_complexity(b);
      std::cout << to_json(report).dump(2) << "\n";
    } else {
      std::cout << render_complexity(b) << "\n";
      for (const auto& r : b.rules) std::cout << "  " << r << "\n";
    }
    return kExitOk;
  }
  const auto& d = std::get<Digraph>(input);
  auto rows = complexity_bounds_digraph(d);
  for (const auto& row : rows) {
    std::cout << "component {";
    for (std::size_t i = 0; i < row.vertices.size(); ++i)
      std::cout << (i ? "," : "") << d.label(row.vertices[i]);
    std::cout << "}: " << render_complexity(row.bounds) << "\n";
    for (const auto& r : row.bounds.rules) std::cout << "  " << r << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flow semigroup defect groups, oracle, and complexity"};
  app.require_subcommand(1);

  AnalyzeOptions aopt;
  auto* analyze = app.add_subcommand(
      "analyze", "structural defect group analysis (never runs the oracle)");
  analyze->add_option("file", aopt.file)->required();
  auto* kopt = analyze
                   ->add_option("--defect", aopt.defect,
                                "defect size k (digraphs clamp k into each "
                                "component's valid range)")
                   ->check(CLI::PositiveNumber);
  analyze->add_flag("--all-defects", aopt.all_defects)->excludes(kopt);
  analyze->add_flag("--json", aopt.json);
  analyze->add_flag("--text", aopt.text);

  std::string ofile, odefect_csv;
  int ok_size = 0;
  std::size_t cap = default_cap();
  bool ojson = false;
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force defect group enumeration");
  oracle->add_option("file", ofile)->required();
  oracle->add_option("--defect", ok_size, "defect size k");
  oracle->add_option("--defect-set", odefect_csv,
                     "comma-separated vertex labels");
  oracle->add_option("--cap", cap, "closure element cap");
  oracle->add_flag("--json", ojson);

  std::string cfile, ccorpus;
  int cmax_n = 7;
  bool call_sets = false;
  std::size_t ccap = default_cap();
  auto* check = app.add_subcommand(
      "check", "verify structural analysis against the oracle");
  check->add_option("file", cfile);
  check->add_option("--corpus", ccorpus, "directory of .edges fixtures");
  check->add_option("--max-n", cmax_n, "skip graphs with more vertices");
  check->add_flag("--all-defect-sets", call_sets,
                  "also verify defect-set independence");
  check->add_option("--cap", ccap, "closure element cap");

  std::string mfile, ma, mb;
  auto* membership = app.add_subcommand(
      "membership", "is the collapsing e[a>b] in the flow semigroup?");
  membership->add_option("file", mfile)->required();
  membership->add_option("a", ma)->required();
  membership->add_option("b", mb)->required();

  std::string xfile;
  bool xjson = false;
  auto* complexity = app.add_subcommand(
      "complexity", "Krohn-Rhodes complexity value or bounds");
  complexity->add_option("file", xfile)->required();
  complexity->add_flag("--json", xjson);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(aopt);
    if (*oracle) return run_oracle(ofile, ok_size, odefect_csv, cap, ojson);
    if (*check) {
      if (cfile.empty() && ccorpus.empty()) {
        std::cerr << "check: need a file or --corpus\n";
        return kExitUsage;
      }
      return run_check(cfile, ccorpus, cmax_n, call_sets, ccap);
    }
    if (*membership) return run_membership(mfile, ma, mb);
    if (*complexity) return run_complexity(xfile, xjson);
  } catch (const cap_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
