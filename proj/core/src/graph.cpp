#include "cgg/graph.hpp"

#include <algorithm>
#include <set>

#include "cgg/errors.hpp"

namespace cgg {

Cgg::Cgg(Labelling labelling) : labelling_(labelling) {}

Cgg::Cgg(Labelling labelling, std::vector<Edge> edges) : labelling_(labelling), edges_(std::move(edges)) {
  for (const Edge& e : edges_) require_edge(labelling_, e);
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) throw ParameterError("duplicate edge " + dup->to_string());
}

bool Cgg::contains(const Edge& e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Cgg complete_graph(int n, Parity parity) {
  Labelling labelling(n, parity);
  const auto labels = labelling.labels();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) edges.emplace_back(labels[i], labels[j]);
  }
  return Cgg(labelling, std::move(edges));
}

std::vector<int> direction_counts(const Cgg& g) {
  std::vector<int> counts(g.n(), 0);
  for (const Edge& e : g.edges()) ++counts[edge_direction(g.labelling(), e).value];
  return counts;
}

namespace {

std::vector<std::vector<bool>> adjacency_by_index(const Cgg& g) {
  const int n = g.n();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges()) {
    const int a = g.labelling().to_index(e.lo());
    const int b = g.labelling().to_index(e.hi());
    adj[a][b] = adj[b][a] = true;
  }
  return adj;
}

}  // namespace

FreeArcs free_arcs(const Cgg& g) {
  const int n = g.n();
  const auto labels = g.labelling().labels();
  FreeArcs out;
  if (g.edge_count() == 0) {
    out.runs.push_back(labels);
    out.max_length = n;
    return out;
  }
  const auto adj = adjacency_by_index(g);
  // reach[s]: length of the longest independent run starting at s going
  // counterclockwise. At least one edge exists, so every run is shorter than n.
  std::vector<int> reach(n, 1);
  for (int s = 0; s < n; ++s) {
    int len = 1;
    while (len < n) {
      const int v = (s + len) % n;
      bool clash = false;
      for (int i = 0; i < len && !clash; ++i) clash = adj[(s + i) % n][v];
      if (clash) break;
      ++len;
    }
    reach[s] = len;
  }
  for (int s = 0; s < n; ++s) {
    const int prev = (s + n - 1) % n;
    // Maximal iff the run from the previous vertex does not cover this one.
    if (reach[prev] >= reach[s] + 1) continue;
    std::vector<Label> run;
    for (int i = 0; i < reach[s]; ++i) run.push_back(labels[(s + i) % n]);
    out.max_length = std::max(out.max_length, reach[s]);
    out.runs.push_back(std::move(run));
  }
  return out;
}

bool is_free_arc(const Cgg& g, std::span<const Label> arc) {
  const Labelling& lab = g.labelling();
  const int n = lab.n();
  if (arc.empty() || static_cast<int>(arc.size()) > n) return false;
  std::set<Label> members;
  for (std::size_t i = 0; i < arc.size(); ++i) {
    if (!lab.is_vertex(arc[i])) return false;
    if (i > 0 && lab.to_index(arc[i]) != (lab.to_index(arc[i - 1]) + 1) % n) return false;
    members.insert(arc[i]);
  }
  if (members.size() != arc.size()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return members.count(e.lo()) && members.count(e.hi()); });
}

}  // namespace cgg
