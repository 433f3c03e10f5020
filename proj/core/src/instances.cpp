#include "urm/instances.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "urm/errors.hpp"
#include "urm/proper_interval.hpp"

namespace urm {
namespace {

Edge labeled(Vertex u, Vertex v) { return Edge::of(u - 1, v - 1); }

Coord uniform(std::mt19937_64& rng, Coord lo, Coord hi) {
  return std::uniform_int_distribution<Coord>(lo, hi)(rng);
}

}  // namespace

Fig1Instance fig1() {
  const std::vector<Edge> edges = {labeled(1, 2), labeled(2, 3), labeled(3, 4), labeled(4, 5),
                                   labeled(5, 6), labeled(6, 7), labeled(1, 3), labeled(1, 4),
                                   labeled(2, 4), labeled(3, 5), labeled(4, 6), labeled(4, 7),
                                   labeled(5, 7)};
  Fig1Instance out;
  out.graph = UndirectedGraph(7, edges);
  out.order = VertexOrdering::identity(7);
  out.bold.edges = {labeled(1, 2), labeled(3, 5), labeled(6, 7)};
  for (Coord left : {0, 1, 5, 9, 12, 16, 18}) out.unit_rep.push_back({left, left + 10});
  return out;
}

Fig2Instance fig2() {
  const std::vector<Edge> edges = {labeled(1, 2), labeled(1, 3), labeled(1, 5), labeled(1, 6),
                                   labeled(4, 5), labeled(4, 6), labeled(4, 7), labeled(4, 8)};
  return {UndirectedGraph(8, edges), VertexOrdering::identity(8)};
}

UndirectedGraph permutation_graph(const std::vector<Vertex>& pi) {
  const auto n = static_cast<Vertex>(pi.size());
  VertexOrdering check(pi);  // throws unless pi is a permutation
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (pi[i] > pi[j]) edges.push_back(Edge::of(i, j));
    }
  }
  return UndirectedGraph(n, edges);
}

IntervalRep gen_unit_intervals(Vertex n, std::uint64_t seed, Coord span, Coord length) {
  if (n < 1 || span < 0 || length < 0) throw InvalidInput("gen_unit_intervals: bad arguments");
  std::mt19937_64 rng(seed);
  IntervalRep rep(static_cast<std::size_t>(n));
  for (auto& iv : rep) {
    iv.left = uniform(rng, 0, span);
    iv.right = iv.left + length;
  }
  return normalize_intervals(rep);
}

IntervalRep gen_intervals(Vertex n, std::uint64_t seed, Coord span, Coord max_length) {
  if (n < 1 || span < 0 || max_length < 0) throw InvalidInput("gen_intervals: bad arguments");
  std::mt19937_64 rng(seed);
  IntervalRep rep(static_cast<std::size_t>(n));
  for (auto& iv : rep) {
    iv.left = uniform(rng, 0, span);
    iv.right = iv.left + uniform(rng, 0, max_length);
  }
  return normalize_intervals(rep);
}

NestRep gen_nest(Vertex n, std::uint64_t seed, Coord span) {
  if (n < 0 || span < 0) throw InvalidInput("gen_nest: bad arguments");
  std::mt19937_64 rng(seed);
  NestRep rep(static_cast<std::size_t>(n));
  for (auto& s : rep) {
    std::array<Coord, 4> c{};
    for (auto& x : c) x = uniform(rng, 0, span);
    std::sort(c.begin(), c.end());
    s = {c[0], c[1], c[2], c[3]};
  }
  return rep;
}

BipPermInstance gen_bipperm(Vertex p, Vertex q, std::uint64_t seed) {
  if (p < 1 || q < 1) throw InvalidInput("gen_bipperm: need p, q >= 1");
  std::mt19937_64 rng(seed);
  // Windows [s_i, t_i] over right indices 0..q-1.
  std::vector<Vertex> s(static_cast<std::size_t>(p)), t(static_cast<std::size_t>(p));
  const Coord step = std::max<Coord>(1, 2 * static_cast<Coord>(q) / p);
  for (Vertex i = 0; i < p; ++i) {
    if (i == 0) {
      s[i] = 0;
    } else {
      s[i] = static_cast<Vertex>(std::min<Coord>(q - 1, uniform(rng, s[i - 1], t[i - 1] + 1)));
    }
    const Vertex floor = i == 0 ? s[i] : std::max(s[i], t[i - 1]);
    t[i] = static_cast<Vertex>(std::min<Coord>(q - 1, floor + uniform(rng, 0, step)));
  }
  t[p - 1] = q - 1;

  // Left vertex i sits just before right vertex s_i.
  std::vector<Vertex> slots;  // >= 0: left index, < 0: right index -(j + 1)
  slots.reserve(static_cast<std::size_t>(p + q));
  Vertex i = 0;
  for (Vertex j = 0; j < q; ++j) {
    while (i < p && s[i] == j) slots.push_back(i++);
    slots.push_back(-(j + 1));
  }

  std::vector<Vertex> label(static_cast<std::size_t>(p + q));
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  auto left_id = [&](Vertex li) { return label[li]; };
  auto right_id = [&](Vertex rj) { return label[p + rj]; };

  std::vector<Vertex> order;
  order.reserve(slots.size());
  for (Vertex sl : slots) order.push_back(sl >= 0 ? left_id(sl) : right_id(-sl - 1));
  std::vector<Edge> edges;
  for (Vertex li = 0; li < p; ++li) {
    for (Vertex rj = s[li]; rj <= t[li]; ++rj) edges.push_back(Edge::of(left_id(li), right_id(rj)));
  }

  BipPermInstance out{UndirectedGraph(p + q, edges), VertexOrdering(std::move(order))};
  if (p + q <= kTransitiveValidatorMaxVertices && !validate_transitive_ordering(out.graph, out.order)) {
    throw InternalError("gen_bipperm produced a non-transitive ordering");
  }
  return out;
}

FamilyInstance gen_family(int k) {
  if (k < 4 || k % 2 != 0) throw InvalidInput("family needs an even k >= 4, got " + std::to_string(k));
  std::vector<Vertex> cycle;  // labels
  for (int v = 1; v <= k; v += (v == 1 ? 1 : 2)) cycle.push_back(v);
  for (int v = k - 1; v >= 3; v -= 2) cycle.push_back(v);

  std::vector<Edge> edges;
  FamilyInstance out;
  out.k = k;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Edge e = labeled(cycle[i], cycle[(i + 1) % cycle.size()]);
    edges.push_back(e);
    if (i % 2 == 0) out.matching.edges.push_back(e);
  }
  if (k > 4) {
    for (int i = 1; i <= k / 2 - 1; ++i) edges.push_back(labeled(2 * i, 2 * i + 1));
  }
  out.graph = UndirectedGraph(k, edges);
  return out;
}

Matching consecutive_heuristic_baseline(const UndirectedGraph& g, const VertexOrdering& ord) {
  const ProperContext ctx(g, ord);
  const Vertex n = g.vertex_count();
  // Candidate i is the edge (order[i], order[i+1]) when present.
  std::vector<char> present(static_cast<std::size_t>(std::max<Vertex>(n - 1, 0)), 0);
  for (Vertex i = 0; i + 1 < n; ++i) present[i] = g.has_edge(ord.at(i), ord.at(i + 1)) ? 1 : 0;
  auto cand = [&](Vertex i) { return Edge::of(ord.at(i), ord.at(i + 1)); };

  // best[i]: largest chain of candidates starting at i whose consecutive
  // members form UR pairs; next[i] continues it.
  std::vector<std::int32_t> best(present.size(), 0), next(present.size(), -1);
  for (Vertex i = static_cast<Vertex>(present.size()) - 1; i >= 0; --i) {
    if (!present[i]) continue;
    best[i] = 1;
    for (Vertex j = i + 2; j < static_cast<Vertex>(present.size()); ++j) {
      if (present[j] && best[j] + 1 > best[i] && ctx.pair_is_ur(cand(i), cand(j))) {
        best[i] = best[j] + 1;
        next[i] = j;
      }
    }
  }
  Matching m;
  const auto start = std::max_element(best.begin(), best.end());
  if (start == best.end() || *start == 0) return m;
  for (auto i = static_cast<std::int32_t>(start - best.begin()); i >= 0; i = next[i]) {
    m.edges.push_back(cand(i));
  }
  return m;
}

}  // namespace urm
