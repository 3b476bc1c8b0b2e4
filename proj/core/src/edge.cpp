#include "cgg/edge.hpp"

#include <algorithm>
#include <cstdlib>

#include "cgg/errors.hpp"

namespace cgg {

Edge::Edge(Label a, Label b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
  if (a == b) throw ParameterError("self-loop at label " + std::to_string(a));
}

std::string Edge::to_string() const { return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "]"; }

Direction direction_of(const Labelling& labelling, int position) {
  const int n = labelling.n();
  int d = position % n;
  if (d < 0) d += n;
  return Direction{d};
}

void require_edge(const Labelling& labelling, const Edge& e) {
  if (!labelling.is_vertex(e.lo()) || !labelling.is_vertex(e.hi())) {
    throw ParameterError("edge " + e.to_string() + " has an endpoint outside the " +
                         std::string(to_string(labelling.parity())) + " labelling on " +
                         std::to_string(labelling.n()) + " vertices");
  }
}

int edge_order(const Labelling& labelling, const Edge& e) {
  require_edge(labelling, e);
  const int diff = e.hi() - e.lo();
  return std::min(diff, 2 * labelling.n() - diff) / 2;
}

Direction edge_direction(const Labelling& labelling, const Edge& e) {
  require_edge(labelling, e);
  // Endpoints share a parity, so the sum is even.
  return direction_of(labelling, (e.lo() + e.hi()) / 2);
}

Label emanating_vertex(const Edge& e) {
  const int a = std::abs(e.lo());
  const int b = std::abs(e.hi());
  if (a == b) return e.hi();
  return a > b ? e.lo() : e.hi();
}

std::vector<Edge> edges_in_direction(const Labelling& labelling, int position) {
  const int n = labelling.n();
  std::vector<Edge> out;
  // [d+t, d-t] for 0 < t < n; t and 2n-t give the same chord.
  for (int t = 1; t < n; ++t) {
    if (!labelling.is_vertex_position(position + t)) continue;
    out.emplace_back(labelling.normalize(position + t), labelling.normalize(position - t));
  }
  return out;
}

}  // namespace cgg
