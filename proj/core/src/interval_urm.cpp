#include "urm/interval_urm.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "urm/errors.hpp"
#include "urm/oracle.hpp"

namespace urm {

EdgeNestMap build_nest_from_intervals(const IntervalRep& rep, const UndirectedGraph& g) {
  if (static_cast<std::size_t>(g.vertex_count()) != rep.size()) {
    throw InvalidInput("graph and interval representation differ in vertex count");
  }
  const IntervalRep norm = normalize_intervals(rep);
  if (!(intersection_graph(norm) == g)) {
    throw InvalidInput("graph is not the intersection graph of the representation");
  }

  struct Row {
    Nest nest;
    Edge edge;
  };
  std::vector<Row> rows;
  rows.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    const Interval& u = norm[e.a];
    const Interval& v = norm[e.b];
    const Nest s{std::min(u.left, v.left), std::max(u.left, v.left), std::min(u.right, v.right),
                 std::max(u.right, v.right)};
    if (s.l > s.r) throw InternalError("edge with empty interval intersection");
    rows.push_back({s, e});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    return std::tie(x.nest.L, x.nest.R, x.edge) < std::tie(y.nest.L, y.nest.R, y.edge);
  });

  EdgeNestMap out;
  out.nest.reserve(rows.size());
  out.edges.reserve(rows.size());
  for (const Row& r : rows) {
    out.nest.push_back(r.nest);
    out.edges.push_back(r.edge);
  }
  out.nest = normalize_nest(out.nest);
  return out;
}

Matching solve_interval_urm(const IntervalRep& rep, std::size_t max_edges, SisGuard guard) {
  const UndirectedGraph g = intersection_graph(normalize_intervals(rep));
  if (g.edge_count() > max_edges) {
    throw BoundError("interval URM runs in O(m^4) time; m = " + std::to_string(g.edge_count()) +
                     " exceeds the bound " + std::to_string(max_edges) + " (override with --force)");
  }
  const EdgeNestMap map = build_nest_from_intervals(rep, g);
  Matching m;
  for (Vertex i : max_sis(map.nest, guard)) m.edges.push_back(map.edges[i]);
  return m.canonical();
}

bool reduction_faithful(const IntervalRep& rep, const UndirectedGraph& g,
                        std::span<const std::vector<std::size_t>> samples) {
  if (g.edge_count() > kReductionCheckMaxEdges) {
    throw BoundError("reduction check is capped at " + std::to_string(kReductionCheckMaxEdges) +
                     " edges (got " + std::to_string(g.edge_count()) + ")");
  }
  const EdgeNestMap map = build_nest_from_intervals(rep, g);
  for (const auto& sample : samples) {
    std::vector<Vertex> ids;
    Matching m;
    std::vector<std::size_t> set = sample;
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (std::size_t i : set) {
      if (i >= map.edges.size()) throw InvalidInput("sample index out of range");
      ids.push_back(static_cast<Vertex>(i));
      m.edges.push_back(map.edges[i]);
    }
    const bool sis = is_strong_independent(map.nest, ids);
    const bool urm = is_matching(g, m) && is_ur_oracle(g, m);
    if (sis != urm) return false;
  }
  return true;
}

}  // namespace urm
