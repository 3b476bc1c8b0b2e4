#include "cgg/disjointness.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "cgg/errors.hpp"

namespace cgg {

bool edges_disjoint(const Labelling& labelling, const Edge& e1, const Edge& e2) {
  require_edge(labelling, e1);
  require_edge(labelling, e2);
  if (e1.has_endpoint(e2.lo()) || e1.has_endpoint(e2.hi())) return false;
  // Cutting the cycle at the leftmost corner turns cyclic order into label
  // order; chords cross iff exactly one endpoint of e2 is inside (lo1, hi1).
  const auto inside = [&](Label v) { return v > e1.lo() && v < e1.hi(); };
  return inside(e2.lo()) == inside(e2.hi());
}

NonCrossingMatcher::NonCrossingMatcher(int n)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), best_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

void NonCrossingMatcher::set_edge(int i, int j, bool present) {
  adj_[i * n_ + j] = adj_[j * n_ + i] = present ? 1 : 0;
}

int NonCrossingMatcher::solve() {
  // best(a, b): most disjoint chords with both ends in [a, b]. Stored at
  // (a, b+1) so that empty intervals (b = a-1) have a slot.
  const int w = n_ + 1;
  const auto at = [&](int a, int b) -> int& { return best_[a * w + (b + 1)]; };
  for (int a = 0; a < n_; ++a) {
    at(a, a - 1) = 0;
    at(a, a) = 0;
  }
  for (int len = 2; len <= n_; ++len) {
    for (int a = 0; a + len - 1 < n_; ++a) {
      const int b = a + len - 1;
      int best = at(a + 1, b);
      const std::uint8_t* row = &adj_[a * n_];
      for (int c = a + 1; c <= b; ++c) {
        if (!row[c]) continue;
        const int right = c + 1 <= b ? at(c + 1, b) : 0;
        best = std::max(best, 1 + at(a + 1, c - 1) + right);
      }
      at(a, b) = best;
    }
  }
  return n_ > 0 ? at(0, n_ - 1) : 0;
}

namespace {

void load(NonCrossingMatcher& matcher, const Labelling& lab, std::span<const Edge> edges) {
  const int n = lab.n();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) matcher.set_edge(i, j, false);
  }
  for (const Edge& e : edges) matcher.set_edge(lab.to_index(e.lo()), lab.to_index(e.hi()), true);
}

}  // namespace

int max_disjoint_size(const Cgg& g) {
  NonCrossingMatcher matcher(g.n());
  load(matcher, g.labelling(), g.edges());
  return matcher.solve();
}

DisjointWitness max_disjoint_set(const Cgg& g) {
  const Labelling& lab = g.labelling();
  NonCrossingMatcher matcher(g.n());
  load(matcher, lab, g.edges());
  const int optimum = matcher.solve();

  // Greedy lexicographic minimisation: accept the smallest next edge that
  // still extends to an optimum using only larger edges.
  DisjointWitness out;
  std::vector<Edge> rest;
  for (const Edge& e : g.edges()) {
    if (out.size == optimum) break;
    const bool compatible = std::all_of(out.edges.begin(), out.edges.end(),
                                        [&](const Edge& c) { return edges_disjoint(lab, c, e); });
    if (!compatible) continue;
    rest.clear();
    for (const Edge& f : g.edges()) {
      if (f <= e || !edges_disjoint(lab, e, f)) continue;
      const bool ok = std::all_of(out.edges.begin(), out.edges.end(),
                                  [&](const Edge& c) { return edges_disjoint(lab, c, f); });
      if (ok) rest.push_back(f);
    }
    load(matcher, lab, rest);
    if (out.size + 1 + matcher.solve() == optimum) {
      out.edges.push_back(e);
      ++out.size;
    }
  }
  return out;
}

bool is_ik1_free(const Cgg& g, int k) {
  if (k < 0) throw ParameterError("k must be non-negative");
  return max_disjoint_size(g) <= k;
}

namespace {

using Bits = std::vector<std::uint64_t>;

class BruteForce {
 public:
  BruteForce(const Cgg& g, int cap) : edges_(g.edges().begin(), g.edges().end()), cap_(cap) {
    const Labelling& lab = g.labelling();
    const std::size_t m = edges_.size();
    words_ = (m + 63) / 64;
    later_disjoint_.assign(m, Bits(words_, 0));
    incident_.assign(lab.n(), Bits(words_, 0));
    for (std::size_t i = 0; i < m; ++i) {
      set(incident_[lab.to_index(edges_[i].lo())], i);
      set(incident_[lab.to_index(edges_[i].hi())], i);
      for (std::size_t j = i + 1; j < m; ++j) {
        if (edges_disjoint(lab, edges_[i], edges_[j])) set(later_disjoint_[i], j);
      }
    }
  }

  DisjointWitness run() {
    if (cap_ > 0 && !edges_.empty()) {
      Bits all(words_, 0);
      for (std::size_t i = 0; i < edges_.size(); ++i) set(all, i);
      scratch_.assign(cap_ + 1, Bits(words_, 0));
      extend(all, 0);
    }
    DisjointWitness out;
    out.size = static_cast<int>(best_.size());
    for (std::size_t i : best_) out.edges.push_back(edges_[i]);
    return out;
  }

 private:
  static void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

  int upper_bound(const Bits& cands) const {
    int count = 0;
    for (auto w : cands) count += std::popcount(w);
    int usable = 0;
    for (const Bits& inc : incident_) {
      for (std::size_t w = 0; w < words_; ++w) {
        if (inc[w] & cands[w]) {
          ++usable;
          break;
        }
      }
    }
    return std::min(count, usable / 2);
  }

  // Depth-first over sorted edge sets, so the first set of a given size
  // reached is the lexicographically smallest one.
  void extend(Bits& cands, int depth) {
    if (depth > static_cast<int>(best_.size())) best_ = chosen_;
    if (static_cast<int>(best_.size()) >= cap_) {
      done_ = true;
      return;
    }
    for (std::size_t w = 0; w < words_; ++w) {
      while (cands[w] != 0) {
        if (depth + upper_bound(cands) <= static_cast<int>(best_.size())) return;
        const int bit = std::countr_zero(cands[w]);
        cands[w] &= cands[w] - 1;
        const std::size_t i = w * 64 + bit;
        Bits& next = scratch_[depth + 1];
        for (std::size_t x = 0; x < words_; ++x) next[x] = cands[x] & later_disjoint_[i][x];
        chosen_.push_back(i);
        extend(next, depth + 1);
        chosen_.pop_back();
        if (done_) return;
      }
    }
  }

  std::vector<Edge> edges_;
  int cap_;
  std::size_t words_ = 0;
  std::vector<Bits> later_disjoint_;
  std::vector<Bits> incident_;
  std::vector<Bits> scratch_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  bool done_ = false;
};

}  // namespace

DisjointWitness max_disjoint_bruteforce(const Cgg& g, int cap) {
  if (cap < 0) throw ParameterError("cap must be non-negative, got " + std::to_string(cap));
  return BruteForce(g, cap).run();
}

}  // namespace cgg
