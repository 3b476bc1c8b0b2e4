#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cgg/bounds.hpp"
#include "cgg/constructions.hpp"
#include "cgg/disjointness.hpp"
#include "cgg/errors.hpp"
#include "cgg/io.hpp"
#include "cgg/search.hpp"
#include "json.hpp"

namespace cgg::cli {

namespace {

using nlohmann::json;

json edges_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.lo(), e.hi()});
  return out;
}

struct ConstructArgs {
  int n = 0;
  int k = 0;
  std::optional<int> ell;
  std::optional<int> q;
  std::string out;
  std::string format = "json";
};

int do_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  GraphMeta meta;
  meta.k = a.k;
  std::optional<Cgg> g;
  if (a.ell) {
    const int q = a.n - 2 * a.k + *a.ell;
    if (a.q && *a.q != q) {
      err << "error: --q " << *a.q << " disagrees with --ell " << *a.ell << " (expected q = n-2k+ell = " << q << ")\n";
      return kExitUsage;
    }
    g = construct_gnkl(a.n, a.k, *a.ell);
    meta.construction = "Gnkl";
    meta.ell = *a.ell;
    meta.q = q;
  } else if (a.q) {
    const FmaxResult f = f_max(a.n, a.k, *a.q);
    g = construct_extremal(a.n, a.k, *a.q);
    meta.q = *a.q;
    switch (f.clause) {
      case FmaxClause::kQLeNMinus2K:
        meta.construction = "Gnk";
        break;
      case FmaxClause::kMiddle:
        meta.construction = "Gnkl";
        meta.ell = f.ell;
        break;
      case FmaxClause::kQGeNMinusK:
        meta.construction = "star";
        break;
    }
  } else {
    g = construct_gnk(a.n, a.k);
    meta.construction = "Gnk";
    meta.q = a.n - 2 * a.k;
  }

  std::string text;
  if (a.format == "json") {
    text = serialize(*g, meta);
  } else if (a.format == "svg") {
    text = render_svg(*g, meta);
  } else {
    text = render_dot(*g, meta);
  }
  if (a.out.empty() || a.out == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) {
    err << "error: cannot write " << a.out << "\n";
    return kExitUsage;
  }
  file << text;
  return kExitOk;
}

struct VerifyArgs {
  std::string file;
  int k = 0;
  std::optional<int> q;
  bool json = false;
};

std::string join_labels(const std::vector<Label>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) out += (i ? "," : "") + std::to_string(labels[i]);
  return out;
}

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream file(a.file, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << a.file << "\n";
    return kExitUsage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const GraphDocument doc = parse_document(buffer.str());
  const Cgg& g = doc.graph;

  int q = 0;
  if (a.q) {
    q = *a.q;
  } else if (doc.meta.q) {
    q = *doc.meta.q;
  } else {
    q = std::clamp(free_arcs(g).max_length, 1, g.n() - 1);
  }
  const bool tagged = doc.meta.construction == "Gnk" && doc.meta.k == a.k && !doc.meta.ell;
  const VerifyReport r = verify_graph(g, a.k, q, tagged ? GraphTag::kGnk : GraphTag::kPlain);

  if (a.json) {
    json j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["q"] = r.q;
    j["edgeCount"] = r.edge_count;
    j["fmax"] = {{"value", r.fmax.value}, {"clause", static_cast<int>(r.fmax.clause)}, {"ell", r.fmax.ell}};
    j["matchesFmax"] = r.matches_fmax;
    j["maxDisjoint"] = {{"size", r.max_disjoint.size}, {"edges", edges_json(r.max_disjoint.edges)}};
    j["ik1Free"] = r.ik1_free;
    j["maxFreeArc"] = r.free_arcs.max_length;
    j["freeArcs"] = r.free_arcs.runs;
    j["hasFreeArcOfOrderQ"] = r.has_free_arc_of_order_q;
    j["directionCounts"] = r.direction_counts;
    if (r.lemma_checked) {
      j["arcLemma"] = {{"minBehind", r.lemma_min_behind}, {"violations", edges_json(r.lemma_violations)}};
    }
    j["passed"] = r.passed();
    out << j.dump(2) << "\n";
  } else {
    const auto yes = [](bool b) { return b ? "yes" : "NO"; };
    out << "n = " << r.n << ", k = " << r.k << ", q = " << r.q << "\n";
    out << "edges: " << r.edge_count << "; f(n,k,q) = " << r.fmax.value << " (clause "
        << static_cast<int>(r.fmax.clause) << ")"
        << "; attains f: " << yes(r.matches_fmax) << "\n";
    out << "max disjoint edges: " << r.max_disjoint.size << "; I_" << r.k + 1 << "-free: " << yes(r.ik1_free)
        << "\n";
    out << "  witness:";
    for (const Edge& e : r.max_disjoint.edges) out << " " << e.to_string();
    out << "\n";
    out << "longest free arc: " << r.free_arcs.max_length << "; order >= q: " << yes(r.has_free_arc_of_order_q)
        << "\n";
    for (const auto& run : r.free_arcs.runs) {
      if (static_cast<int>(run.size()) == r.free_arcs.max_length) out << "  {" << join_labels(run) << "}\n";
    }
    out << "edges per direction:";
    for (int c : r.direction_counts) out << " " << c;
    out << "\n";
    if (r.lemma_checked) {
      out << "arc lemma: min behind = " << r.lemma_min_behind << ", violations = " << r.lemma_violations.size()
          << "\n";
    }
    out << (r.passed() ? "PASS" : "FAIL") << "\n";
  }
  return r.passed() ? kExitOk : kExitCheckFailed;
}

int do_fmax(int n, int k, int q, std::ostream& out) {
  const FmaxResult f = f_max(n, k, q);
  out << "f(" << n << "," << k << "," << q << ") = " << f.value << "\n";
  out << "clause " << static_cast<int>(f.clause) << " (" << to_string(f.clause) << ")";
  if (f.clause == FmaxClause::kMiddle) out << ", ell = " << f.ell;
  out << "\n";
  return kExitOk;
}

struct SearchArgs {
  int n = 0;
  int k = 0;
  int q = 0;
  std::int64_t budget = 10'000'000;
  int threads = 1;
  bool no_bound = false;
  bool json = false;
};

int do_search(const SearchArgs& a, std::ostream& out) {
  SearchOptions options;
  options.node_budget = a.budget;
  options.threads = a.threads;
  options.use_bound = !a.no_bound;
  const SearchCertificate cert = search_f(a.n, a.k, a.q, options);
  const FmaxResult f = f_max(a.n, a.k, a.q);
  const bool exact = !cert.budget_exhausted;
  const bool agrees = exact && cert.optimum == f.value;
  if (a.json) {
    json j;
    j["n"] = a.n;
    j["k"] = a.k;
    j["q"] = a.q;
    j["optimum"] = cert.optimum;
    j["exact"] = exact;
    j["nodesExplored"] = cert.nodes_explored;
    j["budgetExhausted"] = cert.budget_exhausted;
    j["fmax"] = f.value;
    j["matchesFmax"] = agrees;
    j["witness"] = json::parse(serialize(cert.witness, GraphMeta{"search", a.k, std::nullopt, a.q}));
    out << j.dump(2) << "\n";
  } else {
    if (exact) {
      out << "optimum " << cert.optimum << " (certified)\n";
    } else {
      out << "best found " << cert.optimum << " (NOT certified: node budget exhausted)\n";
    }
    out << "nodes explored: " << cert.nodes_explored << "\n";
    out << "f(" << a.n << "," << a.k << "," << a.q << ") = " << f.value << "; "
        << (agrees ? "match" : "MISMATCH") << "\n";
    out << "witness:";
    for (const Edge& e : cert.witness.edges()) out << " " << e.to_string();
    out << "\n";
  }
  return agrees ? kExitOk : kExitCheckFailed;
}

int do_table(int n_max, bool as_json, bool as_csv, std::ostream& out, std::ostream& err) {
  if (n_max < 4) {
    err << "error: --n-max must be at least 4\n";
    return kExitUsage;
  }
  if (as_json) {
    json rows = json::array();
    for (int n = 4; n <= n_max; ++n) {
      for (int k = 1; k <= n / 2 - 1; ++k) {
        for (int q = 1; q <= n - 1; ++q) {
          const FmaxResult f = f_max(n, k, q);
          rows.push_back({{"n", n}, {"k", k}, {"q", q}, {"value", f.value}, {"clause", static_cast<int>(f.clause)}});
        }
      }
    }
    out << rows.dump(2) << "\n";
    return kExitOk;
  }
  if (as_csv) {
    out << "n,k";
    for (int q = 1; q <= n_max - 1; ++q) out << ",q" << q;
    out << "\n";
    for (int n = 4; n <= n_max; ++n) {
      for (int k = 1; k <= n / 2 - 1; ++k) {
        out << n << "," << k;
        for (int q = 1; q <= n_max - 1; ++q) {
          out << ",";
          if (fmax_domain_contains(n, k, q)) out << f_max(n, k, q).value;
        }
        out << "\n";
      }
    }
    return kExitOk;
  }
  for (int n = 4; n <= n_max; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      out << "n=" << n << " k=" << k << ":";
      for (int q = 1; q <= n - 1; ++q) out << " " << f_max(n, k, q).value;
      out << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal convex geometric graphs with no k+1 pairwise disjoint edges"};
  app.name(args.empty() ? "cgg" : args.front());
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "Build an extremal graph");
  construct_cmd->add_option("--n", construct.n, "number of vertices")->required();
  construct_cmd->add_option("--k", construct.k, "no k+1 pairwise disjoint edges")->required();
  construct_cmd->add_option("--ell", construct.ell, "build G(n,k,ell)");
  construct_cmd->add_option("--q", construct.q, "order of the free boundary arc; picks the construction");
  construct_cmd->add_option("--out", construct.out, "output file (default: stdout)");
  construct_cmd->add_option("--format", construct.format, "json, svg or dot")
      ->check(CLI::IsMember({"json", "svg", "dot"}));

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a graph document");
  verify_cmd->add_option("file", verify.file, "graph JSON document")->required();
  verify_cmd->add_option("--k", verify.k)->required();
  verify_cmd->add_option("--q", verify.q, "free arc order (default: from metadata, else longest free arc)");
  verify_cmd->add_flag("--json", verify.json, "machine-readable report");

  int fn = 0;
  int fk = 0;
  int fq = 0;
  auto* fmax_cmd = app.add_subcommand("fmax", "Evaluate f(n,k,q) in closed form");
  fmax_cmd->add_option("--n", fn)->required();
  fmax_cmd->add_option("--k", fk)->required();
  fmax_cmd->add_option("--q", fq)->required();

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "Certify f(n,k,q) by branch and bound");
  search_cmd->add_option("--n", search.n)->required();
  search_cmd->add_option("--k", search.k)->required();
  search_cmd->add_option("--q", search.q)->required();
  search_cmd->add_option("--budget", search.budget, "node budget")->check(CLI::PositiveNumber);
  search_cmd->add_option("--threads", search.threads, "worker threads")->check(CLI::PositiveNumber);
  search_cmd->add_flag("--no-bound", search.no_bound, "disable the per-direction bound");
  search_cmd->add_flag("--json", search.json);

  int n_max = 0;
  bool table_json = false;
  bool table_csv = false;
  auto* table_cmd = app.add_subcommand("table", "Print the f(n,k,q) grid");
  table_cmd->add_option("--n-max", n_max)->required();
  auto* json_flag = table_cmd->add_flag("--json", table_json);
  auto* csv_flag = table_cmd->add_flag("--csv", table_csv);
  json_flag->excludes(csv_flag);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("cgg");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*construct_cmd) return do_construct(construct, out, err);
    if (*verify_cmd) return do_verify(verify, out, err);
    if (*fmax_cmd) return do_fmax(fn, fk, fq, out);
    if (*search_cmd) return do_search(search, out);
    if (*table_cmd) return do_table(n_max, table_json, table_csv, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cgg::cli
