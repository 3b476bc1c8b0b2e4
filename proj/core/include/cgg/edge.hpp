#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cgg/labelling.hpp"

namespace cgg {

/// An unordered pair of distinct labels, stored with lo() < hi().
class Edge {
 public:
  Edge(Label a, Label b);

  Label lo() const { return lo_; }
  Label hi() const { return hi_; }
  bool has_endpoint(Label v) const { return v == lo_ || v == hi_; }

  std::string to_string() const;

  friend auto operator<=>(const Edge&, const Edge&) = default;

 private:
  Label lo_;
  Label hi_;
};

/// A parallel class of chords. Positions d and d-n name the same direction;
/// the canonical value is d mod n, in 0..n-1.
struct Direction {
  int value = 0;

  friend auto operator<=>(const Direction&, const Direction&) = default;
};

Direction direction_of(const Labelling& labelling, int position);

/// Throws ParameterError unless both endpoints are vertices of `labelling`.
void require_edge(const Labelling& labelling, const Edge& e);

/// Half the cyclic label distance between the endpoints, in [1, floor(n/2)].
int edge_order(const Labelling& labelling, const Edge& e);

/// The direction d with lo + hi = 2d (mod 2n).
Direction edge_direction(const Labelling& labelling, const Edge& e);

/// The endpoint of larger absolute value; the positive one when lo = -hi.
Label emanating_vertex(const Edge& e);

/// Every chord of the complete graph in the direction of polygon corner
/// `position`, ordered from the side of that corner outward.
std::vector<Edge> edges_in_direction(const Labelling& labelling, int position);

}  // namespace cgg
