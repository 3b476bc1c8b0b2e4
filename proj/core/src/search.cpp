#include "cgg/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <string>
#include <thread>

#include "cgg/block.hpp"
#include "cgg/constructions.hpp"
#include "cgg/errors.hpp"

namespace cgg {

namespace {

constexpr int kSplitDepth = 3;

// Candidate edges in branching order, grouped by direction.
struct Problem {
  Labelling labelling;
  int k = 0;
  std::vector<Edge> edges;
  std::vector<int> group;  // per edge
  std::vector<int> group_size;
  std::vector<std::pair<int, int>> ends;  // cyclic indices per edge
};

Problem make_problem(int n, int k, int q) {
  const Labelling lab = canonical_labelling(n, q);
  const auto avoided = [q](Label v) { return std::abs(v) <= q - 1; };
  std::map<int, std::vector<Edge>> by_direction;
  const auto labels = lab.labels();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) {
      if (avoided(labels[i]) && avoided(labels[j])) continue;
      const Edge e(labels[i], labels[j]);
      by_direction[edge_direction(lab, e).value].push_back(e);
    }
  }
  std::vector<std::pair<int, std::vector<Edge>>> groups(by_direction.begin(), by_direction.end());
  // Most allowed edges first; stable on direction value.
  std::stable_sort(groups.begin(), groups.end(),
                   [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });
  Problem p{lab, k, {}, {}, {}, {}};
  for (auto& [dir, list] : groups) {
    // Longest (most central) chords first.
    std::stable_sort(list.begin(), list.end(),
                     [&](const Edge& a, const Edge& b) { return edge_order(lab, a) > edge_order(lab, b); });
    const int g = static_cast<int>(p.group_size.size());
    p.group_size.push_back(static_cast<int>(list.size()));
    for (const Edge& e : list) {
      p.edges.push_back(e);
      p.group.push_back(g);
      p.ends.emplace_back(lab.to_index(e.lo()), lab.to_index(e.hi()));
    }
  }
  return p;
}

struct Shared {
  std::int64_t budget = 0;
  std::atomic<std::int64_t> nodes{0};
  std::atomic<bool> exhausted{false};
};

struct SubtreeResult {
  int best = -1;
  std::vector<int> chosen;
  std::int64_t nodes = 0;
};

class Worker {
 public:
  Worker(const Problem& problem, const SearchOptions& options, Shared& shared)
      : p_(problem),
        options_(options),
        shared_(shared),
        matcher_(problem.labelling.n()),
        chosen_in_group_(problem.group_size.size(), 0),
        remaining_in_group_(problem.group_size) {}

  SubtreeResult solve(int subtree, int depth) {
    result_ = SubtreeResult{};
    // Replay the fixed prefix. Bit (depth-1-i) of `subtree` set means edge i
    // is excluded, so subtree 0 is the include-everything branch.
    for (int i = 0; i < depth; ++i) {
      const bool include = ((subtree >> (depth - 1 - i)) & 1) == 0;
      --remaining_in_group_[p_.group[i]];
      if (include) {
        if (!try_include(i)) {
          undo_prefix(i + 1);
          return result_;
        }
      }
    }
    dfs(depth, count_);
    undo_prefix(depth);
    return result_;
  }

 private:
  bool try_include(int i) {
    const int g = p_.group[i];
    if (options_.use_bound && chosen_in_group_[g] >= p_.k) return false;
    matcher_.set_edge(p_.ends[i].first, p_.ends[i].second, true);
    if (matcher_.solve() > p_.k) {
      matcher_.set_edge(p_.ends[i].first, p_.ends[i].second, false);
      return false;
    }
    ++chosen_in_group_[g];
    stack_.push_back(i);
    ++count_;
    return true;
  }

  void undo_include(int i) {
    matcher_.set_edge(p_.ends[i].first, p_.ends[i].second, false);
    --chosen_in_group_[p_.group[i]];
    stack_.pop_back();
    --count_;
  }

  void undo_prefix(int upto) {
    for (int i = upto - 1; i >= 0; --i) {
      ++remaining_in_group_[p_.group[i]];
      if (!stack_.empty() && stack_.back() == i) undo_include(i);
    }
  }

  int bound() const {
    int total = 0;
    for (std::size_t g = 0; g < remaining_in_group_.size(); ++g) {
      total += std::min(p_.k - chosen_in_group_[g], remaining_in_group_[g]);
    }
    return total;
  }

  void dfs(int pos, int count) {
    if (shared_.exhausted.load(std::memory_order_relaxed)) return;
    ++result_.nodes;
    if (shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.budget) {
      shared_.exhausted = true;
      return;
    }
    if (count > result_.best) {
      result_.best = count;
      result_.chosen = stack_;
    }
    if (pos == static_cast<int>(p_.edges.size())) return;
    if (options_.use_bound && count + bound() <= result_.best) return;

    --remaining_in_group_[p_.group[pos]];
    if (try_include(pos)) {
      dfs(pos + 1, count + 1);
      undo_include(pos);
    }
    dfs(pos + 1, count);
    ++remaining_in_group_[p_.group[pos]];
  }

  const Problem& p_;
  const SearchOptions& options_;
  Shared& shared_;
  NonCrossingMatcher matcher_;
  std::vector<int> chosen_in_group_;
  std::vector<int> remaining_in_group_;
  std::vector<int> stack_;
  int count_ = 0;
  SubtreeResult result_;
};

}  // namespace

SearchCertificate search_f(int n, int k, int q, const SearchOptions& options) {
  if (!fmax_domain_contains(n, k, q)) {
    throw ParameterError("search needs 1 <= k <= floor(n/2)-1 and 1 <= q <= n-1; got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k) + ", q=" + std::to_string(q));
  }
  if (options.node_budget < 1) throw ParameterError("node budget must be at least 1");

  const Problem problem = make_problem(n, k, q);
  const int depth = std::min<int>(kSplitDepth, static_cast<int>(problem.edges.size()));
  const int subtrees = 1 << depth;

  Shared shared;
  shared.budget = options.node_budget;
  std::vector<SubtreeResult> results(subtrees);
  std::atomic<int> next{0};
  const auto work = [&] {
    Worker worker(problem, options, shared);
    for (int s = next++; s < subtrees; s = next++) results[s] = worker.solve(s, depth);
  };
  const int threads = std::clamp(options.threads, 1, subtrees);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  const SubtreeResult* best = &results.front();
  std::int64_t nodes = 0;
  for (const SubtreeResult& r : results) {
    nodes += r.nodes;
    if (r.best > best->best) best = &r;
  }
  std::vector<Edge> witness;
  for (int i : best->chosen) witness.push_back(problem.edges[i]);
  return SearchCertificate{std::max(best->best, 0), Cgg(problem.labelling, std::move(witness)), nodes,
                           shared.exhausted.load()};
}

bool VerifyReport::passed() const {
  return ik1_free && has_free_arc_of_order_q && matches_fmax && lemma_violations.empty();
}

std::vector<Edge> arc_lemma_violations(const Cgg& g, int k) {
  const int n = g.n();
  const int m = (n - 2 * k) / 2;
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    const int behind = static_cast<int>(arc_split(g.labelling(), e).behind.size());
    int need = m;
    if (n % 2 == 0 && emanating_vertex(e) < 0) need = m - 1;
    if (behind < need) out.push_back(e);
  }
  return out;
}

VerifyReport verify_graph(const Cgg& g, int k, int q, GraphTag tag) {
  VerifyReport r;
  r.n = g.n();
  r.k = k;
  r.q = q;
  r.fmax = f_max(g.n(), k, q);
  r.edge_count = static_cast<std::int64_t>(g.edge_count());
  r.max_disjoint = max_disjoint_set(g);
  r.ik1_free = r.max_disjoint.size <= k;
  r.free_arcs = free_arcs(g);
  r.has_free_arc_of_order_q = r.free_arcs.max_length >= q;
  r.direction_counts = direction_counts(g);
  r.matches_fmax = r.edge_count == r.fmax.value;
  if (tag == GraphTag::kGnk) {
    r.lemma_checked = true;
    r.lemma_violations = arc_lemma_violations(g, k);
    r.lemma_min_behind = std::numeric_limits<int>::max();
    for (const Edge& e : g.edges()) {
      r.lemma_min_behind = std::min(r.lemma_min_behind, static_cast<int>(arc_split(g.labelling(), e).behind.size()));
    }
    if (g.edge_count() == 0) r.lemma_min_behind = 0;
  }
  return r;
}

}  // namespace cgg
