#pragma once

#include <vector>

#include "cgg/block.hpp"
#include "cgg/edge.hpp"
#include "cgg/graph.hpp"
#include "cgg/labelling.hpp"

namespace cgg {

/// Parameters of G_{n,k,l} (l = 0 is plain G_{n,k}) and the sets derived
/// from them.
///
/// With m = floor((n-2k)/2), the avoided arc A has 2m+l vertices for even n
/// and 2m+l+1 for odd n. A sits on the right, symmetric about the horizontal
/// axis; K is its complement, split from top to bottom into K+ (k-l
/// vertices), K0 (l vertices) and K- (k-l vertices).
class ConstructionSpec {
 public:
  ConstructionSpec(int n, int k, int ell = 0);

  int n() const { return n_; }
  int k() const { return k_; }
  int ell() const { return ell_; }
  int m() const { return (n_ - 2 * k_) / 2; }

  int free_arc_size() const;
  const Labelling& labelling() const { return labelling_; }

  /// A, counterclockwise from its bottom end.
  std::vector<Label> free_arc() const;
  bool is_avoided(Label v) const;

  std::vector<Label> k_plus() const;
  std::vector<Label> k_zero() const;
  std::vector<Label> k_minus() const;

 private:
  std::vector<Label> complement_top_down() const;

  int n_;
  int k_;
  int ell_;
  Labelling labelling_;
};

/// Labelling and arc for "q consecutive vertices on the right, symmetric about
/// the horizontal axis". Used by the q >= n-k graph and by the search.
Labelling canonical_labelling(int n, int q);
std::vector<Label> canonical_free_arc(int n, int q);

/// One block per direction, in the order the defining clauses enumerate
/// them. Directions that two clauses define are built both ways and must
/// agree, otherwise ConstructionIntegrityError.
std::vector<EdgeBlock> gnk_blocks(int n, int k);
std::vector<EdgeBlock> gnkl_blocks(const ConstructionSpec& spec);

Cgg construct_gnk(int n, int k);
Cgg construct_gnkl(int n, int k, int ell);

/// Every edge with at least one endpoint outside the canonical arc of order q.
Cgg construct_star(int n, int q);

/// Dispatches on q to whichever construction attains f(n,k,q).
Cgg construct_extremal(int n, int k, int q);

/// Edges in the direction of `position` with at least one endpoint outside
/// A, ordered from `position` outward. They always form a consecutive run;
/// ConstructionIntegrityError otherwise.
std::vector<Edge> allowed_edges(const ConstructionSpec& spec, int position);

/// The edges the "closest to the center" rule selects in a direction: all
/// allowed edges if there are at most k, otherwise the k-block of allowed
/// edges with the most balanced sides, the lower one on ties.
std::vector<Edge> closest_to_center_edges(const ConstructionSpec& spec, int position);

/// G_{n,k} expressed in the labelling of `spec`. For odd l the two graphs live
/// on opposite parities, and G_{n,k} is turned one label counterclockwise.
Cgg gnk_in_labelling_of(const ConstructionSpec& spec);

}  // namespace cgg
