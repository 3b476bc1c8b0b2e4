#pragma once

#include <cstdint>
#include <vector>

#include "cgg/edge.hpp"
#include "cgg/graph.hpp"

namespace cgg {

/// Two chords are disjoint when they share no endpoint and do not cross.
bool edges_disjoint(const Labelling& labelling, const Edge& e1, const Edge& e2);

struct DisjointWitness {
  int size = 0;
  std::vector<Edge> edges;  // sorted
};

/// Exhaustive search over edge subsets, stopping once `cap` pairwise disjoint
/// edges are found. Exact whenever the true maximum is below `cap`; otherwise
/// reports size == cap. The witness is the lexicographically smallest sorted
/// edge list of the reported size.
DisjointWitness max_disjoint_bruteforce(const Cgg& g, int cap);

/// Exact maximum set of pairwise disjoint edges, by interval dynamic
/// programming over the cyclic order. Ties go to the lexicographically
/// smallest sorted edge list.
DisjointWitness max_disjoint_set(const Cgg& g);

/// Same maximum as max_disjoint_set, without building a witness.
int max_disjoint_size(const Cgg& g);

/// No k+1 pairwise disjoint edges.
bool is_ik1_free(const Cgg& g, int k);

/// Reusable interval DP over vertex indices 0..n-1, for callers that toggle
/// edges many times (the branch-and-bound search).
class NonCrossingMatcher {
 public:
  explicit NonCrossingMatcher(int n);

  int n() const { return n_; }
  void set_edge(int i, int j, bool present);
  bool has_edge(int i, int j) const { return adj_[i * n_ + j] != 0; }

  /// Maximum number of pairwise disjoint chords among the present edges.
  int solve();

 private:
  int n_;
  std::vector<std::uint8_t> adj_;
  std::vector<int> best_;
};

}  // namespace cgg
