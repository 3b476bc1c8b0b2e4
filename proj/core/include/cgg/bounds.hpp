#pragma once

#include <cstdint>
#include <map>
#include <string_view>

#include "cgg/constructions.hpp"
#include "cgg/graph.hpp"

namespace cgg {

enum class FmaxClause { kQLeNMinus2K = 1, kMiddle = 2, kQGeNMinusK = 3 };

std::string_view to_string(FmaxClause clause);

/// Maximum edge count of an I_{k+1}-free CGG on n vertices with a free
/// boundary arc of order q.
struct FmaxResult {
  std::int64_t value = 0;
  FmaxClause clause = FmaxClause::kQLeNMinus2K;
  int ell = 0;  // q - (n-2k) in the middle clause, 0 otherwise
};

/// Requires 1 <= k <= floor(n/2)-1 and 1 <= q <= n-1.
FmaxResult f_max(int n, int k, int q);

/// True if (n, k, q) is inside the domain f_max accepts.
bool fmax_domain_contains(int n, int k, int q);

std::int64_t choose2(std::int64_t x);

/// ceil((l - |j|)/2) for |j| <= l, else 0. `j` is the direction's
/// representative nearest to 0.
int loss_formula(int k, int ell, int j);

/// max(0, k - #allowed edges) in the direction of `position`, by counting.
int loss_direct(const ConstructionSpec& spec, int position);

struct LossProfile {
  std::map<int, int> per_direction;  // keyed by representative in (-n/2, n/2]
  int total = 0;
};

LossProfile loss_profile(const ConstructionSpec& spec);

/// ceil(n/2) + 2 * sum_{i=1}^{n-1} ceil(i/2) == C(n+1, 2), evaluated exactly.
bool triangular_identity(int n);

/// A graph with exactly kn edges and no k+1 disjoint edges has k edges in
/// every direction. Returns false only if `g` is such a graph and some
/// direction deviates.
bool direction_cap_holds(const Cgg& g, int k);

}  // namespace cgg
