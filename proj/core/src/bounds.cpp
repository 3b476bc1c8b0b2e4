#include "cgg/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "cgg/disjointness.hpp"
#include "cgg/errors.hpp"

namespace cgg {

std::string_view to_string(FmaxClause clause) {
  switch (clause) {
    case FmaxClause::kQLeNMinus2K:
      return "Q_LE_N_MINUS_2K";
    case FmaxClause::kMiddle:
      return "MIDDLE";
    case FmaxClause::kQGeNMinusK:
      return "Q_GE_N_MINUS_K";
  }
  return "?";
}

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

bool fmax_domain_contains(int n, int k, int q) { return n >= 4 && k >= 1 && k <= n / 2 - 1 && q >= 1 && q <= n - 1; }

FmaxResult f_max(int n, int k, int q) {
  if (!fmax_domain_contains(n, k, q)) {
    throw ParameterError("f(n,k,q) needs 1 <= k <= floor(n/2)-1 and 1 <= q <= n-1; got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ", q=" + std::to_string(q));
  }
  const std::int64_t kn = static_cast<std::int64_t>(k) * n;
  if (q <= n - 2 * k) return {kn, FmaxClause::kQLeNMinus2K, 0};
  if (q < n - k) {
    const int ell = q - (n - 2 * k);
    return {kn - choose2(ell + 1), FmaxClause::kMiddle, ell};
  }
  return {choose2(n) - choose2(q), FmaxClause::kQGeNMinusK, 0};
}

int loss_formula(int k, int ell, int j) {
  if (ell < 0 || ell >= k) {
    throw ParameterError("loss needs 0 <= ell < k; got ell=" + std::to_string(ell) + ", k=" + std::to_string(k));
  }
  const int gap = ell - std::abs(j);
  return gap <= 0 ? 0 : (gap + 1) / 2;
}

int loss_direct(const ConstructionSpec& spec, int position) {
  const int allowed = static_cast<int>(allowed_edges(spec, position).size());
  return std::max(0, spec.k() - allowed);
}

LossProfile loss_profile(const ConstructionSpec& spec) {
  LossProfile out;
  const int n = spec.n();
  for (int d = 0; d < n; ++d) {
    const int j = d <= n / 2 ? d : d - n;
    const int loss = loss_direct(spec, j);
    out.per_direction[j] = loss;
    out.total += loss;
  }
  return out;
}

bool triangular_identity(int n) {
  if (n < 1) throw ParameterError("identity needs n >= 1");
  const auto ceil_half = [](std::int64_t x) { return (x + 1) / 2; };
  std::int64_t lhs = ceil_half(n);
  for (int i = 1; i <= n - 1; ++i) lhs += 2 * ceil_half(i);
  return lhs == choose2(static_cast<std::int64_t>(n) + 1);
}

bool direction_cap_holds(const Cgg& g, int k) {
  if (static_cast<std::int64_t>(g.edge_count()) != static_cast<std::int64_t>(k) * g.n()) return true;
  if (!is_ik1_free(g, k)) return true;
  const auto counts = direction_counts(g);
  return std::all_of(counts.begin(), counts.end(), [k](int c) { return c == k; });
}

}  // namespace cgg
