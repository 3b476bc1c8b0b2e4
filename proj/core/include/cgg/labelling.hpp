#pragma once

#include <compare>
#include <string_view>
#include <vector>

namespace cgg {

/// A vertex label on the ambient 2n-gon, in {-n+1, ..., n}.
using Label = int;

/// Which residue class of 2n-gon positions carries the graph's vertices.
enum class Parity { kOdd, kEven };

std::string_view to_string(Parity parity);

/// The n vertices of a convex geometric graph placed on every other corner of
/// a regular 2n-gon whose corners are numbered -n+1..n counterclockwise, with
/// 0 on the right and n on the left.
///
/// Labels increase counterclockwise, so cyclic index i (0..n-1) is simply the
/// i-th smallest label. The wrap of that linear order sits at the leftmost
/// corner of the polygon.
class Labelling {
 public:
  Labelling(int n, Parity parity);

  /// The labelling whose parity fits a free arc of `arc_size` vertices placed
  /// symmetrically on the right: odd labels when the arc size is even.
  static Labelling for_free_arc(int n, int arc_size);

  int n() const { return n_; }
  Parity parity() const { return parity_; }

  /// Maps any integer polygon position into the label range (-n, n].
  Label normalize(int position) const;

  /// True if `position` (taken mod 2n) is a corner that hosts a vertex.
  bool is_vertex_position(int position) const;

  /// True if `label` lies in the label range and has the vertex parity.
  bool is_vertex(Label label) const;

  Label min_label() const;
  Label max_label() const { return min_label() + 2 * (n_ - 1); }

  int to_index(Label label) const;
  Label to_label(int index) const;

  /// All vertex labels in counterclockwise (ascending) order.
  std::vector<Label> labels() const;

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  int n_;
  Parity parity_;
};

}  // namespace cgg
