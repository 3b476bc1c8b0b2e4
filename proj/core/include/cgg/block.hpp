#pragma once

#include <vector>

#include "cgg/edge.hpp"
#include "cgg/labelling.hpp"

namespace cgg {

/// A run of consecutive parallel edges in one direction, together with the
/// two boundary arcs it leaves free. The near arc is the one containing the
/// direction's polygon corner.
struct EdgeBlock {
  int position = 0;  // the polygon corner that names the direction
  Direction direction;
  std::vector<Edge> edges;  // innermost (nearest to `position`) first
  std::vector<Label> near_arc;
  std::vector<Label> far_arc;
};

/// The block of `count` consecutive edges in the direction of `position` that
/// leaves exactly `far_count` vertices on the far side.
///
/// The far count is constrained by parity: it is congruent to n mod 2 exactly
/// when `position` is not a vertex. A mismatch raises InfeasibleBlockError;
/// counts out of range raise ParameterError.
EdgeBlock block(const Labelling& labelling, int count, int position, int far_count);

/// The blocks of `count` consecutive edges that exist in a direction, in
/// order of decreasing far count.
std::vector<EdgeBlock> blocks_in_direction(const Labelling& labelling, int count, int position);

/// The two open boundary arcs of an edge. `behind` is the side away from the
/// leftmost polygon corner; with the G_{n,k} labellings this is the side that
/// does not contain the boundary gap between n-1 and -(n-1).
struct ArcSplit {
  std::vector<Label> behind;
  std::vector<Label> front;
};

ArcSplit arc_split(const Labelling& labelling, const Edge& e);

/// True if the arc behind `e2` is contained in the arc behind `e1`.
/// Reflexive.
bool lies_behind(const Labelling& labelling, const Edge& e2, const Edge& e1);

}  // namespace cgg
