#include "urm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "urm/errors.hpp"

namespace urm {

bool is_matching(const UndirectedGraph& g, const Matching& m) {
  std::vector<Vertex> seen;
  seen.reserve(2 * m.size());
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.a, e.b)) {
      throw InvalidInput("edge " + std::to_string(e.a) + " " + std::to_string(e.b) +
                         " is not an edge of the graph");
    }
    seen.push_back(e.a);
    seen.push_back(e.b);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

class PerfectMatchingCounter {
 public:
  PerfectMatchingCounter(const UndirectedGraph& g, std::uint64_t cap) : cap_(cap) {
    adj_.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex w : g.neighbors(u)) adj_[u] |= std::uint64_t{1} << w;
    }
  }

  std::uint64_t count(std::uint64_t remaining) {
    if (remaining == 0) return 1;
    if (std::popcount(remaining) % 2 != 0) return 0;
    if (auto it = memo_.find(remaining); it != memo_.end()) return it->second;
    const int v = std::countr_zero(remaining);
    const std::uint64_t rest = remaining & ~(std::uint64_t{1} << v);
    std::uint64_t candidates = adj_[v] & rest;
    std::uint64_t total = 0;
    while (candidates != 0 && total < cap_) {
      const int w = std::countr_zero(candidates);
      candidates &= candidates - 1;
      total += count(rest & ~(std::uint64_t{1} << w));
    }
    total = std::min(total, cap_);
    memo_.emplace(remaining, total);
    return total;
  }

 private:
  std::uint64_t cap_;
  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace

std::uint64_t count_perfect_matchings(const UndirectedGraph& g, std::uint64_t cap) {
  const Vertex n = g.vertex_count();
  if (n > kOracleMaxVertices) {
    throw BoundError("perfect-matching count is capped at " + std::to_string(kOracleMaxVertices) +
                     " vertices (got " + std::to_string(n) + ")");
  }
  if (cap == 0) throw InvalidInput("cap must be positive");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return PerfectMatchingCounter(g, cap).count(all);
}

bool is_ur_oracle(const UndirectedGraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw InvalidInput("edge set is not a matching");
  const auto vs = m.matched_vertices();
  return count_perfect_matchings(induced_subgraph(g, vs), 2) == 1;
}

bool pair_has_alt_c4(const UndirectedGraph& g, const Edge& e, const Edge& f) {
  if (e.shares_vertex(f)) throw InvalidInput("edges share a vertex");
  auto sees = [&](Vertex x, const Edge& other) {
    return g.has_edge(x, other.a) || g.has_edge(x, other.b);
  };
  return sees(e.a, f) && sees(e.b, f) && sees(f.a, e) && sees(f.b, e);
}

std::optional<std::pair<Edge, Edge>> find_alt_c4_pair(const UndirectedGraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw InvalidInput("edge set is not a matching");
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (pair_has_alt_c4(g, m.edges[i], m.edges[j])) return std::pair{m.edges[i], m.edges[j]};
    }
  }
  return std::nullopt;
}

bool is_ur_c4free(const UndirectedGraph& g, const Matching& m) { return !find_alt_c4_pair(g, m); }

std::optional<std::pair<Edge, Edge>> find_consecutive_violation(const UndirectedGraph& g,
                                                                const VertexOrdering& ord,
                                                                const Matching& m,
                                                                const PairPredicate& pair_ok) {
  if (!is_matching(g, m)) throw InvalidInput("edge set is not a matching");
  std::vector<Edge> sorted = m.edges;
  auto lpos = [&](const Edge& e) { return ord.position(ord.left_of(e)); };
  std::sort(sorted.begin(), sorted.end(),
            [&](const Edge& x, const Edge& y) { return lpos(x) < lpos(y); });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (lpos(sorted[i - 1]) == lpos(sorted[i])) {
      throw InvalidInput("two edges share their first endpoint in the ordering");
    }
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (!pair_ok(sorted[i - 1], sorted[i])) return std::pair{sorted[i - 1], sorted[i]};
  }
  return std::nullopt;
}

bool is_ur_consecutive(const UndirectedGraph& g, const VertexOrdering& ord, const Matching& m,
                       const PairPredicate& pair_ok) {
  return !find_consecutive_violation(g, ord, m, pair_ok);
}

namespace {

class BruteforceSearch {
 public:
  explicit BruteforceSearch(const UndirectedGraph& g)
      : g_(g), edges_(g.edges()), used_(static_cast<std::size_t>(g.vertex_count()), 0) {}

  Matching run() {
    visit(0);
    return best_;
  }

 private:
  void visit(std::size_t i) {
    if (current_.size() > best_.size()) best_ = current_;
    for (std::size_t j = i; j < edges_.size(); ++j) {
      const std::size_t room = std::min(
          edges_.size() - j, static_cast<std::size_t>(g_.vertex_count()) / 2 - current_.size());
      if (current_.size() + room <= best_.size()) return;
      const Edge& e = edges_[j];
      if (used_[e.a] || used_[e.b]) continue;
      current_.edges.push_back(e);
      // Subsets of UR matchings are UR, so a non-UR prefix can be cut.
      if (is_ur_oracle(g_, current_)) {
        used_[e.a] = used_[e.b] = 1;
        visit(j + 1);
        used_[e.a] = used_[e.b] = 0;
      }
      current_.edges.pop_back();
    }
  }

  const UndirectedGraph& g_;
  std::vector<Edge> edges_;
  std::vector<char> used_;
  Matching current_;
  Matching best_;
};

}  // namespace

Matching max_urm_bruteforce(const UndirectedGraph& g) {
  if (g.edge_count() > kBruteforceMaxEdges) {
    throw BoundError("brute-force URM search is capped at " + std::to_string(kBruteforceMaxEdges) +
                     " edges (got " + std::to_string(g.edge_count()) + ")");
  }
  return BruteforceSearch(g).run();
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const UndirectedGraph& g, const Matching& m, std::size_t max_len)
      : g_(g),
        max_len_(max_len),
        mate_(static_cast<std::size_t>(g.vertex_count()), -1),
        on_path_(static_cast<std::size_t>(g.vertex_count()), 0) {
    for (const Edge& e : m.edges) {
      mate_[e.a] = e.b;
      mate_[e.b] = e.a;
    }
  }

  std::vector<AlternatingCycle> run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (mate_[s] < s) continue;  // unmatched, or the pair is handled from its smaller end
      start_ = s;
      push(s);
      push(mate_[s]);
      extend();
      pop();
      pop();
    }
    std::sort(found_.begin(), found_.end(), [](const auto& x, const auto& y) {
      return std::pair(x.length(), x.vertices) < std::pair(y.length(), y.vertices);
    });
    return found_;
  }

 private:
  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
  }
  void pop() {
    on_path_[path_.back()] = 0;
    path_.pop_back();
  }

  // The path starts at start_ and ends with a matching edge.
  void extend() {
    if (path_.size() + 2 > max_len_) return;
    const Vertex cur = path_.back();
    for (Vertex w : g_.neighbors(cur)) {
      if (w <= start_ || on_path_[w] || w == mate_[cur]) continue;
      const Vertex w2 = mate_[w];
      if (w2 <= start_ || on_path_[w2]) continue;
      push(w);
      push(w2);
      if (g_.has_edge(w2, start_)) record();
      extend();
      pop();
      pop();
    }
  }

  void record() {
    AlternatingCycle c;
    if (path_[1] < path_.back()) {
      c.vertices = path_;
    } else {
      c.vertices.push_back(path_[0]);
      c.vertices.insert(c.vertices.end(), path_.rbegin(), path_.rend() - 1);
    }
    found_.push_back(std::move(c));
  }

  const UndirectedGraph& g_;
  std::size_t max_len_;
  std::vector<Vertex> mate_;
  std::vector<char> on_path_;
  std::vector<Vertex> path_;
  Vertex start_ = 0;
  std::vector<AlternatingCycle> found_;
};

}  // namespace

std::vector<AlternatingCycle> enumerate_alternating_cycles(const UndirectedGraph& g,
                                                           const Matching& m, std::size_t max_len) {
  if (g.vertex_count() > kCycleEnumerationMaxVertices) {
    throw BoundError("alternating-cycle enumeration is capped at " +
                     std::to_string(kCycleEnumerationMaxVertices) + " vertices (got " +
                     std::to_string(g.vertex_count()) + ")");
  }
  if (!is_matching(g, m)) throw InvalidInput("edge set is not a matching");
  return CycleEnumerator(g, m, max_len).run();
}

}  // namespace urm
