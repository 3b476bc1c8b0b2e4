#include "cgg/block.hpp"

#include <string>

#include "cgg/errors.hpp"

namespace cgg {

namespace {

std::vector<Label> corners(const Labelling& labelling, int from, int count) {
  std::vector<Label> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(labelling.normalize(from + 2 * i));
  return out;
}

}  // namespace

EdgeBlock block(const Labelling& labelling, int count, int position, int far_count) {
  const int n = labelling.n();
  if (count < 1 || 2 * count > n) {
    throw ParameterError("block size " + std::to_string(count) + " out of range for n=" + std::to_string(n));
  }
  if (far_count < 0 || far_count > n - 2 * count) {
    throw ParameterError("far count " + std::to_string(far_count) + " outside [0, " +
                         std::to_string(n - 2 * count) + "]");
  }
  // Chords in this direction are [d+t, d-t]; the innermost one of the block
  // has offset t0 and leaves t0-1 vertices on the near side.
  const int t0 = n - 2 * count - far_count + 1;
  if (!labelling.is_vertex_position(position + t0)) {
    throw InfeasibleBlockError("no block in direction " + std::to_string(position) + " leaves " +
                               std::to_string(far_count) + " vertices on the far side (parity)");
  }
  EdgeBlock out;
  out.position = labelling.normalize(position);
  out.direction = direction_of(labelling, position);
  for (int i = 0; i < count; ++i) {
    const int t = t0 + 2 * i;
    out.edges.emplace_back(labelling.normalize(position + t), labelling.normalize(position - t));
  }
  const int t_last = t0 + 2 * (count - 1);
  out.near_arc = corners(labelling, position - t0 + 2, t0 - 1);
  out.far_arc = corners(labelling, position + t_last + 2, far_count);
  return out;
}

std::vector<EdgeBlock> blocks_in_direction(const Labelling& labelling, int count, int position) {
  std::vector<EdgeBlock> out;
  for (int far = labelling.n() - 2 * count; far >= 0; --far) {
    const int t0 = labelling.n() - 2 * count - far + 1;
    if (labelling.is_vertex_position(position + t0)) out.push_back(block(labelling, count, position, far));
  }
  return out;
}

ArcSplit arc_split(const Labelling& labelling, const Edge& e) {
  require_edge(labelling, e);
  ArcSplit out;
  std::vector<Label> before;
  for (Label v : labelling.labels()) {
    if (v > e.lo() && v < e.hi()) {
      out.behind.push_back(v);
    } else if (v > e.hi()) {
      out.front.push_back(v);
    } else if (v < e.lo()) {
      before.push_back(v);
    }
  }
  out.front.insert(out.front.end(), before.begin(), before.end());
  return out;
}

bool lies_behind(const Labelling& labelling, const Edge& e2, const Edge& e1) {
  require_edge(labelling, e1);
  require_edge(labelling, e2);
  return e1.lo() <= e2.lo() && e2.hi() <= e1.hi();
}

}  // namespace cgg
