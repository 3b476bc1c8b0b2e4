#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cgg/edge.hpp"
#include "cgg/labelling.hpp"

namespace cgg {

/// A convex geometric graph: a labelling plus a set of edges on it.
/// Immutable once built; edges are kept sorted and unique.
class Cgg {
 public:
  explicit Cgg(Labelling labelling);

  /// Throws ParameterError on a foreign endpoint or a repeated edge.
  Cgg(Labelling labelling, std::vector<Edge> edges);

  const Labelling& labelling() const { return labelling_; }
  int n() const { return labelling_.n(); }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool contains(const Edge& e) const;

  friend bool operator==(const Cgg&, const Cgg&) = default;

 private:
  Labelling labelling_;
  std::vector<Edge> edges_;
};

/// CK(n), every pair of vertices joined.
Cgg complete_graph(int n, Parity parity = Parity::kOdd);

/// Number of edges of `g` in each direction, indexed by Direction::value.
std::vector<int> direction_counts(const Cgg& g);

struct FreeArcs {
  /// Maximal independent runs of consecutive vertices, each listed
  /// counterclockwise and ordered by the cyclic index of its first vertex.
  std::vector<std::vector<Label>> runs;
  int max_length = 0;
};

/// For an edgeless graph the single run is the whole cycle.
FreeArcs free_arcs(const Cgg& g);

/// True if `arc` is a run of consecutive vertices with no edge inside it.
bool is_free_arc(const Cgg& g, std::span<const Label> arc);

}  // namespace cgg
