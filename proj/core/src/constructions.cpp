#include "cgg/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

namespace {

void require_nk(int n, int k) {
  if (n < 4) throw ParameterError("n must be at least 4, got " + std::to_string(n));
  if (k < 1 || k > n / 2 - 1) {
    throw ParameterError("k must satisfy 1 <= k <= floor(n/2)-1; got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
  }
}

void require_q(int n, int q) {
  if (n < 4) throw ParameterError("n must be at least 4, got " + std::to_string(n));
  if (q < 1 || q > n - 1) {
    throw ParameterError("q must satisfy 1 <= q <= n-1; got n=" + std::to_string(n) + ", q=" + std::to_string(q));
  }
}

int ceil_half(int x) { return x <= 0 ? -((-x) / 2) : (x + 1) / 2; }

// Collects one block per direction. A direction defined twice must come out
// the same both times.
class BlockAssembler {
 public:
  BlockAssembler(const Labelling& labelling, std::string name) : labelling_(labelling), name_(std::move(name)) {}

  void add(int count, int position, int far_count) {
    EdgeBlock b = block(labelling_, count, position, far_count);
    auto sorted = b.edges;
    std::sort(sorted.begin(), sorted.end());
    const auto [it, inserted] = seen_.emplace(b.direction.value, sorted);
    if (!inserted) {
      if (it->second != sorted) {
        throw ConstructionIntegrityError(name_ + ": direction " + std::to_string(b.direction.value) +
                                         " is defined twice with different edges");
      }
      return;
    }
    blocks_.push_back(std::move(b));
  }

  std::vector<EdgeBlock> finish() && {
    if (static_cast<int>(blocks_.size()) != labelling_.n()) {
      throw ConstructionIntegrityError(name_ + ": covered " + std::to_string(blocks_.size()) + " of " +
                                       std::to_string(labelling_.n()) + " directions");
    }
    return std::move(blocks_);
  }

 private:
  Labelling labelling_;
  std::string name_;
  std::map<int, std::vector<Edge>> seen_;
  std::vector<EdgeBlock> blocks_;
};

Cgg union_of(const Labelling& labelling, const std::vector<EdgeBlock>& blocks) {
  std::vector<Edge> edges;
  for (const EdgeBlock& b : blocks) edges.insert(edges.end(), b.edges.begin(), b.edges.end());
  return Cgg(labelling, std::move(edges));
}

std::vector<Label> symmetric_right_arc(const Labelling& labelling, int size) {
  std::vector<Label> out;
  for (Label v : labelling.labels()) {
    if (std::abs(v) <= size - 1) out.push_back(v);
  }
  return out;
}

}  // namespace

namespace {

int checked_arc_size(int n, int k, int ell) {
  require_nk(n, k);
  if (ell < 0 || ell >= k) {
    throw ParameterError("ell must satisfy 0 <= ell < k; got ell=" + std::to_string(ell) + ", k=" + std::to_string(k));
  }
  return 2 * ((n - 2 * k) / 2) + ell + n % 2;
}

}  // namespace

ConstructionSpec::ConstructionSpec(int n, int k, int ell)
    : n_(n), k_(k), ell_(ell), labelling_(Labelling::for_free_arc(n, checked_arc_size(n, k, ell))) {}

int ConstructionSpec::free_arc_size() const { return 2 * m() + ell_ + n_ % 2; }

std::vector<Label> ConstructionSpec::free_arc() const { return symmetric_right_arc(labelling_, free_arc_size()); }

bool ConstructionSpec::is_avoided(Label v) const { return labelling_.is_vertex(v) && std::abs(v) < free_arc_size(); }

std::vector<Label> ConstructionSpec::complement_top_down() const {
  // Counterclockwise from the top end of A: up the positive side, past the
  // leftmost corner, down the negative side.
  std::vector<Label> upper;
  std::vector<Label> lower;
  for (Label v : labelling_.labels()) {
    if (is_avoided(v)) continue;
    (v > 0 ? upper : lower).push_back(v);
  }
  upper.insert(upper.end(), lower.begin(), lower.end());
  return upper;
}

std::vector<Label> ConstructionSpec::k_plus() const {
  const auto all = complement_top_down();
  return {all.begin(), all.begin() + (k_ - ell_)};
}

std::vector<Label> ConstructionSpec::k_zero() const {
  const auto all = complement_top_down();
  return {all.begin() + (k_ - ell_), all.begin() + k_};
}

std::vector<Label> ConstructionSpec::k_minus() const {
  const auto all = complement_top_down();
  return {all.begin() + k_, all.end()};
}

Labelling canonical_labelling(int n, int q) {
  require_q(n, q);
  return Labelling::for_free_arc(n, q);
}

std::vector<Label> canonical_free_arc(int n, int q) { return symmetric_right_arc(canonical_labelling(n, q), q); }

std::vector<EdgeBlock> gnk_blocks(int n, int k) {
  const ConstructionSpec spec(n, k, 0);
  const int m = spec.m();
  BlockAssembler out(spec.labelling(), "G(" + std::to_string(n) + "," + std::to_string(k) + ")");
  if (n % 2 == 0) {
    for (int j = -m; j <= m; ++j) out.add(k, j, std::abs(j));
    for (int i = 0; i <= 2 * k; ++i) out.add(k, m + i, m - i % 2);
  } else {
    for (int j = -(m + 1); j <= m + 1; ++j) out.add(k, j, std::abs(j));
    for (int i = 0; i <= 2 * k + 1; ++i) out.add(k, m + i, m + i % 2);
  }
  return std::move(out).finish();
}

std::vector<EdgeBlock> gnkl_blocks(const ConstructionSpec& spec) {
  const int n = spec.n();
  const int k = spec.k();
  const int l = spec.ell();
  const int m = spec.m();
  BlockAssembler out(spec.labelling(), "G(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                           std::to_string(l) + ")");
  // K enlarged by |j| vertices on the far side; the k edges nearest its ends.
  for (int j = -l - m; j <= -l; ++j) out.add(k, j, -j - l);
  // Fewer than k edges fit: take them all, one idle vertex in the middle
  // when l - |j| is odd.
  for (int j = -l; j <= l; ++j) {
    const int deficit = l - std::abs(j);
    out.add(k - ceil_half(deficit), j, deficit % 2);
  }
  for (int j = l; j <= l + m; ++j) out.add(k, j, j - l);
  if (n % 2 == 0) {
    // Central when j = l+m (mod 2); otherwise m+1 idle vertices above, m-1 below.
    for (int j = l + m; j < 2 * k + m - l; ++j) out.add(k, j, (j - l - m) % 2 == 0 ? m : m - 1);
  } else {
    // Almost central: m+1 idle vertices above when j = l+m (mod 2), else m.
    for (int j = l + m; j <= 2 * k + m - l + 1; ++j) {
      const int above = (j - l - m) % 2 == 0 ? m + 1 : m;
      out.add(k, j, n - 2 * k - above);
    }
  }
  return std::move(out).finish();
}

Cgg construct_gnk(int n, int k) { return union_of(ConstructionSpec(n, k, 0).labelling(), gnk_blocks(n, k)); }

Cgg construct_gnkl(int n, int k, int ell) {
  const ConstructionSpec spec(n, k, ell);
  return union_of(spec.labelling(), gnkl_blocks(spec));
}

Cgg construct_star(int n, int q) {
  const Labelling labelling = canonical_labelling(n, q);
  const auto labels = labelling.labels();
  const auto avoided = [q](Label v) { return std::abs(v) <= q - 1; };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (avoided(labels[i]) && avoided(labels[j])) continue;
      edges.emplace_back(labels[i], labels[j]);
    }
  }
  return Cgg(labelling, std::move(edges));
}

Cgg construct_extremal(int n, int k, int q) {
  require_nk(n, k);
  require_q(n, q);
  if (q <= n - 2 * k) return construct_gnk(n, k);
  if (q < n - k) return construct_gnkl(n, k, q - (n - 2 * k));
  return construct_star(n, q);
}

std::vector<Edge> allowed_edges(const ConstructionSpec& spec, int position) {
  const auto all = edges_in_direction(spec.labelling(), position);
  std::vector<Edge> out;
  int first = -1;
  int last = -1;
  for (int i = 0; i < static_cast<int>(all.size()); ++i) {
    if (spec.is_avoided(all[i].lo()) && spec.is_avoided(all[i].hi())) continue;
    if (first < 0) first = i;
    if (last >= 0 && last != i - 1) {
      throw ConstructionIntegrityError("allowed edges in direction " + std::to_string(position) +
                                       " are not consecutive");
    }
    last = i;
    out.push_back(all[i]);
  }
  return out;
}

std::vector<Edge> closest_to_center_edges(const ConstructionSpec& spec, int position) {
  const auto allowed = allowed_edges(spec, position);
  if (static_cast<int>(allowed.size()) <= spec.k()) return allowed;

  const Labelling& lab = spec.labelling();
  const Label corner = lab.normalize(position);
  const auto is_allowed = [&](const Edge& e) { return std::find(allowed.begin(), allowed.end(), e) != allowed.end(); };

  const EdgeBlock* chosen = nullptr;
  int chosen_imbalance = 0;
  const auto candidates = blocks_in_direction(lab, spec.k(), position);
  for (const EdgeBlock& b : candidates) {
    if (!std::all_of(b.edges.begin(), b.edges.end(), is_allowed)) continue;
    const int imbalance = std::abs(static_cast<int>(b.near_arc.size()) - static_cast<int>(b.far_arc.size()));
    if (chosen == nullptr || imbalance < chosen_imbalance) {
      chosen = &b;
      chosen_imbalance = imbalance;
      continue;
    }
    if (imbalance > chosen_imbalance) continue;
    // Tie: keep the lower block. For a corner above the horizontal axis the
    // far side points down, so fewer far vertices means lower.
    if (corner == 0 || corner == lab.n()) {
      throw ConstructionIntegrityError("tie between vertical blocks in direction " + std::to_string(position));
    }
    const bool upper = corner > 0;
    const bool lower_than_chosen = upper ? b.far_arc.size() < chosen->far_arc.size()
                                         : b.far_arc.size() > chosen->far_arc.size();
    if (lower_than_chosen) chosen = &b;
  }
  if (chosen == nullptr) {
    throw ConstructionIntegrityError("no k-block of allowed edges in direction " + std::to_string(position));
  }
  return chosen->edges;
}

Cgg gnk_in_labelling_of(const ConstructionSpec& spec) {
  const Cgg gnk = construct_gnk(spec.n(), spec.k());
  if (gnk.labelling() == spec.labelling()) return gnk;
  const Labelling& lab = spec.labelling();
  std::vector<Edge> turned;
  for (const Edge& e : gnk.edges()) turned.emplace_back(lab.normalize(e.lo() + 1), lab.normalize(e.hi() + 1));
  return Cgg(lab, std::move(turned));
}

}  // namespace cgg
