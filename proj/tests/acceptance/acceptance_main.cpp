// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cgg/bounds.hpp"
#include "cgg/constructions.hpp"
#include "cgg/disjointness.hpp"
#include "cgg/errors.hpp"
#include "cgg/io.hpp"
#include "cgg/search.hpp"
#include "cli.hpp"

namespace {

using namespace cgg;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> body;
};

// Graphs of criterion 1: even n in 8..24, odd n in 9..25, every valid k.
std::vector<std::pair<int, int>> gnk_grid() {
  std::vector<std::pair<int, int>> out;
  for (int n = 8; n <= 25; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) out.emplace_back(n, k);
  }
  return out;
}

std::string tag(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }
std::string tag(int n, int k, int x) { return "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(x) + ")"; }

Outcome edge_counts() {
  Outcome o;
  int graphs = 0;
  for (auto [n, k] : gnk_grid()) {
    const Cgg g = construct_gnk(n, k);
    ++graphs;
    if (static_cast<int>(g.edge_count()) != k * n) o.fail("G" + tag(n, k) + " has " + std::to_string(g.edge_count()) + " edges");
    for (int c : direction_counts(g)) {
      if (c != k) o.fail("G" + tag(n, k) + " has a direction with " + std::to_string(c) + " edges");
    }
  }
  if (o.ok) o.detail = std::to_string(graphs) + " graphs, |E| = kn, k per direction";
  return o;
}

Outcome freeness() {
  Outcome o;
  int graphs = 0;
  for (auto [n, k] : gnk_grid()) {
    const Cgg g = construct_gnk(n, k);
    const int dp = max_disjoint_set(g).size;
    const int bf = max_disjoint_bruteforce(g, k + 1).size;
    ++graphs;
    if (dp != k) o.fail("DP gives " + std::to_string(dp) + " on G" + tag(n, k));
    if (bf != dp) o.fail("brute force " + std::to_string(bf) + " != DP " + std::to_string(dp) + " on G" + tag(n, k));
  }
  std::mt19937 rng(1234567);
  std::uniform_int_distribution<int> pick_n(4, 12);
  std::uniform_real_distribution<double> density(0.05, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = pick_n(rng);
    const Cgg full = complete_graph(n, trial % 2 ? Parity::kOdd : Parity::kEven);
    std::bernoulli_distribution keep(density(rng));
    std::vector<Edge> edges;
    for (const Edge& e : full.edges()) {
      if (keep(rng)) edges.push_back(e);
    }
    const Cgg g(full.labelling(), std::move(edges));
    const int dp = max_disjoint_set(g).size;
    const int bf = max_disjoint_bruteforce(g, n).size;
    if (dp != bf) o.fail("random trial " + std::to_string(trial) + ": DP " + std::to_string(dp) + " vs brute force " + std::to_string(bf));
  }
  if (o.ok) o.detail = std::to_string(graphs) + " constructions at max-disjoint = k, DP = brute force on them and 1000 random subgraphs";
  return o;
}

Outcome middle_clause() {
  Outcome o;
  int graphs = 0;
  for (int n = 4; n <= 24; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      for (int ell = 1; ell < k; ++ell) {
        const Cgg g = construct_gnkl(n, k, ell);
        ++graphs;
        const int want = k * n - ell * (ell + 1) / 2;
        if (static_cast<int>(g.edge_count()) != want) o.fail("G" + tag(n, k, ell) + " has " + std::to_string(g.edge_count()) + " edges, want " + std::to_string(want));
        if (free_arcs(g).max_length < n - 2 * k + ell) o.fail("G" + tag(n, k, ell) + " free arc too short");
      }
    }
  }
  if (construct_gnkl(12, 3, 2).edge_count() != 33) o.fail("G(12,3,2) != 33 edges");
  if (construct_gnkl(13, 3, 2).edge_count() != 36) o.fail("G(13,3,2) != 36 edges");
  if (o.ok) o.detail = std::to_string(graphs) + " graphs, |E| = kn - l(l+1)/2, free arc >= n-2k+l; spots 33, 36";
  return o;
}

Outcome arc_lemmas() {
  Outcome o;
  std::size_t edges = 0;
  for (auto [n, k] : gnk_grid()) {
    const Cgg g = construct_gnk(n, k);
    const int m = (n - 2 * k) / 2;
    for (const Edge& e : g.edges()) {
      const int behind = static_cast<int>(arc_split(g.labelling(), e).behind.size());
      const int need = (n % 2 == 0 && emanating_vertex(e) < 0) ? m - 1 : m;
      ++edges;
      if (behind < need) o.fail("G" + tag(n, k) + " edge " + e.to_string() + " has " + std::to_string(behind) + " behind, need " + std::to_string(need));
    }
  }
  if (o.ok) o.detail = std::to_string(edges) + " edges checked";
  return o;
}

Outcome losses() {
  Outcome o;
  int specs = 0;
  for (int n = 4; n <= 24; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      for (int ell = 0; ell < k; ++ell) {
        const ConstructionSpec spec(n, k, ell);
        const LossProfile p = loss_profile(spec);
        ++specs;
        for (const auto& [j, loss] : p.per_direction) {
          if (loss != loss_formula(k, ell, j)) o.fail("loss mismatch at " + tag(n, k, ell) + " j=" + std::to_string(j));
        }
        if (p.total != ell * (ell + 1) / 2) o.fail("total loss " + std::to_string(p.total) + " at " + tag(n, k, ell));
      }
    }
  }
  for (int n = 1; n <= 1000; ++n) {
    if (!triangular_identity(n)) o.fail("triangular identity fails at n=" + std::to_string(n));
  }
  if (o.ok) o.detail = std::to_string(specs) + " specs, formula = count, totals l(l+1)/2; identity n <= 1000";
  return o;
}

Outcome optimality() {
  Outcome o;
  int cases = 0;
  std::int64_t nodes = 0;
  SearchOptions options;
  options.node_budget = 10'000'000;
  for (int n = 5; n <= 8; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      for (int q = 1; q <= n - 1; ++q) {
        const SearchCertificate cert = search_f(n, k, q, options);
        ++cases;
        nodes += cert.nodes_explored;
        const std::int64_t f = f_max(n, k, q).value;
        if (cert.budget_exhausted) o.fail("budget exhausted at " + tag(n, k, q));
        if (cert.optimum != f) o.fail("search " + std::to_string(cert.optimum) + " != f " + std::to_string(f) + " at " + tag(n, k, q));
        if (!verify_graph(cert.witness, k, q).passed()) o.fail("witness fails verification at " + tag(n, k, q));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (n,k,q) certified, " + std::to_string(nodes) + " nodes";
  return o;
}

Outcome star_regime() {
  Outcome o;
  int graphs = 0;
  for (int n = 4; n <= 12; ++n) {
    for (int q = 1; q <= n - 1; ++q) {
      const Cgg g = construct_star(n, q);
      ++graphs;
      if (static_cast<std::int64_t>(g.edge_count()) != choose2(n) - choose2(q)) o.fail("star" + tag(n, q) + " edge count");
      if (!is_ik1_free(g, n - q)) o.fail("star" + tag(n, q) + " has " + std::to_string(n - q + 1) + " disjoint edges");
      if (!is_free_arc(g, canonical_free_arc(n, q))) o.fail("star" + tag(n, q) + " arc not free");
    }
  }
  if (construct_star(10, 8).edge_count() != 17) o.fail("star(10,8) != 17 edges");
  if (o.ok) o.detail = std::to_string(graphs) + " graphs; spot 17";
  return o;
}

Outcome consistency() {
  Outcome o;
  int directions = 0;
  int double_defined = 0;
  for (int n = 4; n <= 25; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      try {
        // The defining clauses enumerate more (clause, direction) pairs than
        // there are directions; the builders throw unless repeats coincide.
        const int m = (n - 2 * k) / 2;
        if (static_cast<int>(gnk_blocks(n, k).size()) != n) o.fail("G" + tag(n, k) + " block count");
        double_defined += (n % 2 == 0 ? (2 * m + 1) + (2 * k + 1) : (2 * m + 3) + (2 * k + 2)) - n;
        if (n <= 24 && construct_gnkl(n, k, 0) != construct_gnk(n, k)) o.fail("G" + tag(n, k, 0) + " != G" + tag(n, k));
        for (int ell = 0; ell < k; ++ell) {
          const ConstructionSpec spec(n, k, ell);
          if (static_cast<int>(gnkl_blocks(spec).size()) != n) o.fail("G" + tag(n, k, ell) + " block count");
          double_defined += 2 * (m + 1) + (2 * ell + 1) + (n % 2 == 0 ? 2 * (k - ell) : 2 * (k - ell) + 2) - n;
          const Cgg g = construct_gnkl(n, k, ell);
          const auto counts = direction_counts(g);
          for (int d = 0; d < n; ++d) {
            const auto rule = closest_to_center_edges(spec, d);
            ++directions;
            bool all_in = static_cast<int>(rule.size()) == counts[d];
            for (const Edge& e : rule) all_in = all_in && g.contains(e);
            if (!all_in) o.fail("closest-to-center differs at " + tag(n, k, ell) + " direction " + std::to_string(d));
          }
        }
      } catch (const ConstructionIntegrityError& e) {
        o.fail(e.what());
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(directions) + " directions cross-checked, " + std::to_string(double_defined) +
               " doubly defined directions coincided";
  }
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli_status(std::vector<std::string> args) {
  args.insert(args.begin(), "cgg");
  std::ostringstream out;
  std::ostringstream err;
  return cli::run(args, out, err);
}

Outcome round_trip() {
  Outcome o;
  int docs = 0;
  for (int n = 4; n <= 16; ++n) {
    for (int k = 1; k <= n / 2 - 1; ++k) {
      for (int q = 1; q <= n - 1; ++q) {
        const Cgg g = construct_extremal(n, k, q);
        const GraphMeta meta{"extremal", k, std::nullopt, q};
        const std::string text = serialize(g, meta);
        const GraphDocument doc = parse_document(text);
        ++docs;
        if (!(doc.graph == g) || !(doc.meta == meta) || serialize(doc.graph, doc.meta) != text) {
          o.fail("round trip differs at " + tag(n, k, q));
        }
      }
    }
  }

  const std::string dir = CGG_GOLDEN_DIR;
  const Cgg gnk = construct_gnk(12, 3);
  const Cgg gnkl = construct_gnkl(13, 3, 2);
  const GraphMeta gnk_meta{"Gnk", 3, std::nullopt, 6};
  const GraphMeta gnkl_meta{"Gnkl", 3, 2, 9};
  const std::vector<std::pair<std::string, std::string>> golden{
      {"gnk_12_3.svg", render_svg(gnk, gnk_meta)},       {"gnk_12_3.dot", render_dot(gnk, gnk_meta)},
      {"gnkl_13_3_2.svg", render_svg(gnkl, gnkl_meta)},  {"gnkl_13_3_2.dot", render_dot(gnkl, gnkl_meta)},
      {"gnkl_13_3_2.json", serialize(gnkl, gnkl_meta)},
  };
  for (const auto& [file, text] : golden) {
    if (read_file(dir + "/" + file) != text) o.fail("golden file " + file + " differs");
  }

  const std::string tmp = "cgg_acceptance_graph.json";
  struct Case {
    std::vector<std::string> args;
    int want;
  };
  const std::vector<Case> cases{
      {{"fmax", "--n", "12", "--k", "3", "--q", "8"}, cli::kExitOk},
      {{"construct", "--n", "10", "--k", "2", "--format", "json", "--out", tmp}, cli::kExitOk},
      {{"verify", tmp, "--k", "2"}, cli::kExitOk},
      {{"verify", tmp, "--k", "1"}, cli::kExitCheckFailed},
      {{"search", "--n", "6", "--k", "1", "--q", "4"}, cli::kExitOk},
      {{"table", "--n-max", "8", "--csv"}, cli::kExitOk},
      {{"fmax", "--n", "12", "--k", "9", "--q", "3"}, cli::kExitUsage},
      {{"verify", "no-such-file.json", "--k", "2"}, cli::kExitUsage},
      {{"unknown-command"}, cli::kExitUsage},
  };
  for (const Case& c : cases) {
    const int got = cli_status(c.args);
    if (got != c.want) {
      std::string line;
      for (const auto& a : c.args) line += " " + a;
      o.fail("cgg" + line + " exited " + std::to_string(got) + ", want " + std::to_string(c.want));
    }
  }
  std::remove(tmp.c_str());
  if (o.ok) {
    o.detail = std::to_string(docs) + " JSON round trips, " + std::to_string(golden.size()) + " golden files, " +
               std::to_string(cases.size()) + " CLI exit codes";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "G(n,k) edge counts", 5.0, edge_counts},
      {2, "I_{k+1}-freeness, DP vs brute force", 60.0, freeness},
      {3, "middle clause G(n,k,l)", 10.0, middle_clause},
      {4, "arc lemmas", 5.0, arc_lemmas},
      {5, "loss accounting", 5.0, losses},
      {6, "search optimality n=5..8", 600.0, optimality},
      {7, "q >= n-k regime", 10.0, star_regime},
      {8, "consistency surfaces", 10.0, consistency},
      {9, "round trip and determinism", 5.0, round_trip},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds > c.limit_seconds) o.fail("too slow");
    failed += o.ok ? 0 : 1;
    std::printf("criterion %d: %s  %s [%.2f s, limit %.0f s] %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, seconds,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
