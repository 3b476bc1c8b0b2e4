#pragma once

#include <cstdint>
#include <vector>

#include "cgg/bounds.hpp"
#include "cgg/disjointness.hpp"
#include "cgg/graph.hpp"

namespace cgg {

struct SearchOptions {
  std::int64_t node_budget = 10'000'000;
  int threads = 1;
  /// When false the per-direction bound is not used and every feasible edge
  /// subset is visited.
  bool use_bound = true;
};

struct SearchCertificate {
  int optimum = 0;
  Cgg witness;
  std::int64_t nodes_explored = 0;
  /// If set, `optimum` is only a lower bound.
  bool budget_exhausted = false;
};

/// Branch and bound over the allowed edges of the canonical arc of order q:
/// the largest I_{k+1}-free edge set avoiding that arc.
///
/// The tree is split into a fixed set of subtrees that are solved
/// independently and merged in order, so the optimum, witness and node count
/// do not depend on `threads`.
SearchCertificate search_f(int n, int k, int q, const SearchOptions& options = {});

enum class GraphTag { kPlain, kGnk };

struct VerifyReport {
  int n = 0;
  int k = 0;
  int q = 0;
  std::int64_t edge_count = 0;
  FmaxResult fmax;
  DisjointWitness max_disjoint;
  bool ik1_free = false;
  FreeArcs free_arcs;
  bool has_free_arc_of_order_q = false;
  std::vector<int> direction_counts;
  bool matches_fmax = false;

  bool lemma_checked = false;
  int lemma_min_behind = 0;
  std::vector<Edge> lemma_violations;

  bool passed() const;
};

/// Runs every check on `g`. The arc lemmas are only evaluated for kGnk.
VerifyReport verify_graph(const Cgg& g, int k, int q, GraphTag tag = GraphTag::kPlain);

/// The arc-count guarantee G_{n,k} satisfies: every edge has at least m-1
/// vertices behind it (at least m if it emanates from a positive label) for
/// even n, and at least m for odd n. Returns the violating edges.
std::vector<Edge> arc_lemma_violations(const Cgg& g, int k);

}  // namespace cgg
