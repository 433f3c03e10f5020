#include "urm/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <tuple>

#include "urm/errors.hpp"

namespace urm {

Edge Edge::of(Vertex u, Vertex v) {
  if (u == v) {
    throw InvalidInput("loop edge at vertex " + std::to_string(u));
  }
  return u < v ? Edge{u, v} : Edge{v, u};
}

namespace {

std::size_t checked_count(Vertex n) {
  if (n < 0) throw InvalidInput("negative vertex count");
  return static_cast<std::size_t>(n);
}

}  // namespace

UndirectedGraph::UndirectedGraph(Vertex n) : n_(n), offsets_(checked_count(n) + 1, 0) {}

UndirectedGraph::UndirectedGraph(Vertex n, std::span<const Edge> edges) : UndirectedGraph(n) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b < 0 || e.a >= n || e.b >= n) {
      throw InvalidInput("edge " + std::to_string(e.a) + " " + std::to_string(e.b) +
                         " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    canon.push_back(Edge::of(e.a, e.b));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());

  std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : canon) {
    ++deg[e.a];
    ++deg[e.b];
  }
  for (Vertex u = 0; u < n; ++u) offsets_[u + 1] = offsets_[u] + deg[u];
  adj_.resize(2 * canon.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Smaller neighbours first, then larger ones; each pass visits them in
  // increasing order, so every list comes out sorted.
  for (const Edge& e : canon) adj_[fill[e.b]++] = e.a;
  for (const Edge& e : canon) adj_[fill[e.a]++] = e.b;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (local[vertices[i]] != -1) throw InvalidInput("duplicate vertex in induced subgraph");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[w];
      if (j > static_cast<Vertex>(i)) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  return UndirectedGraph(static_cast<Vertex>(vertices.size()), edges);
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order)
    : order_(std::move(order)), pos_(order_.size(), -1) {
  const auto n = static_cast<Vertex>(order_.size());
  for (Vertex i = 0; i < n; ++i) {
    Vertex v = order_[i];
    if (v < 0 || v >= n || pos_[v] != -1) {
      throw InvalidInput("ordering is not a permutation of 0.." + std::to_string(n - 1));
    }
    pos_[v] = i;
  }
}

VertexOrdering VertexOrdering::identity(Vertex n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return VertexOrdering(std::move(order));
}

namespace {

struct Endpoint {
  Coord coord;
  int kind;  // 0 = left, 1 = right
  Vertex id;
  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

std::vector<Endpoint> sorted_endpoints(const IntervalRep& rep) {
  std::vector<Endpoint> ev;
  ev.reserve(2 * rep.size());
  for (std::size_t u = 0; u < rep.size(); ++u) {
    if (rep[u].left > rep[u].right) {
      throw InvalidInput("interval of vertex " + std::to_string(u) + " has left > right");
    }
    ev.push_back({rep[u].left, 0, static_cast<Vertex>(u)});
    ev.push_back({rep[u].right, 1, static_cast<Vertex>(u)});
  }
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

IntervalRep normalize_intervals(const IntervalRep& rep) {
  IntervalRep out(rep.size());
  auto ev = sorted_endpoints(rep);
  for (std::size_t i = 0; i < ev.size(); ++i) {
    Coord rank = static_cast<Coord>(i) + 1;
    if (ev[i].kind == 0) {
      out[ev[i].id].left = rank;
    } else {
      out[ev[i].id].right = rank;
    }
  }
  return out;
}

UndirectedGraph intersection_graph(const IntervalRep& rep) {
  auto ev = sorted_endpoints(rep);
  std::vector<Vertex> active;
  std::vector<std::size_t> slot(rep.size());
  std::vector<Edge> edges;
  for (const Endpoint& p : ev) {
    if (p.kind == 0) {
      for (Vertex w : active) edges.push_back(Edge::of(w, p.id));
      slot[p.id] = active.size();
      active.push_back(p.id);
    } else {
      std::size_t s = slot[p.id];
      active[s] = active.back();
      slot[active[s]] = s;
      active.pop_back();
    }
  }
  return UndirectedGraph(static_cast<Vertex>(rep.size()), edges);
}

VertexOrdering ordering_from_proper_rep(const IntervalRep& rep) {
  std::vector<Vertex> order(rep.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return std::tie(rep[a].left, rep[a].right, a) < std::tie(rep[b].left, rep[b].right, b);
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Interval& p = rep[order[i - 1]];
    const Interval& q = rep[order[i]];
    if (p == q) continue;
    if (p.left < q.left && p.right < q.right) continue;
    // Sorted by left: either p contains q (q.right <= p.right) or q contains p
    // (equal lefts, q.right > p.right).
    Vertex outer = q.right <= p.right ? order[i - 1] : order[i];
    Vertex inner = outer == order[i] ? order[i - 1] : order[i];
    throw ValidationError("not a proper representation: interval of vertex " +
                          std::to_string(outer) + " strictly contains interval of vertex " +
                          std::to_string(inner));
  }
  return VertexOrdering(std::move(order));
}

LambdaRho compute_lambda_rho(const UndirectedGraph& g, const VertexOrdering& ord) {
  const Vertex n = g.vertex_count();
  LambdaRho lr{std::vector<Vertex>(static_cast<std::size_t>(n)),
               std::vector<Vertex>(static_cast<std::size_t>(n))};
  for (Vertex u = 0; u < n; ++u) {
    Vertex lo = ord.position(u);
    Vertex hi = lo;
    for (Vertex w : g.neighbors(u)) {
      const Vertex p = ord.position(w);
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    lr.lambda[u] = ord.at(lo);
    lr.rho[u] = ord.at(hi);
  }
  return lr;
}

namespace {

void require_cover(const UndirectedGraph& g, const VertexOrdering& ord) {
  if (ord.size() != g.vertex_count()) {
    throw InvalidInput("ordering covers " + std::to_string(ord.size()) + " vertices, graph has " +
                       std::to_string(g.vertex_count()));
  }
}

}  // namespace

OrderingCheck validate_proper_ordering(const UndirectedGraph& g, const VertexOrdering& ord) {
  require_cover(g, ord);
  return validate_proper_ordering(g, ord, compute_lambda_rho(g, ord));
}

OrderingCheck validate_proper_ordering(const UndirectedGraph& g, const VertexOrdering& ord,
                                       const LambdaRho& lr) {
  require_cover(g, ord);
  const Vertex n = g.vertex_count();
  std::vector<Vertex> stamp;
  for (Vertex u = 0; u < n; ++u) {
    const Vertex lo = ord.position(lr.lambda[u]);
    const Vertex hi = ord.position(lr.rho[u]);
    if (static_cast<std::size_t>(hi - lo) == g.degree(u)) continue;
    if (stamp.empty()) stamp.assign(static_cast<std::size_t>(n), -1);
    for (Vertex w : g.neighbors(u)) stamp[w] = u;
    for (Vertex p = lo; p <= hi; ++p) {
      const Vertex v = ord.at(p);
      if (v == u || stamp[v] == u) continue;
      OrderingCheck bad;
      bad.ok = false;
      bad.condition = "uw is an edge but uv or vw is missing";
      if (p < ord.position(u)) {
        bad.witness = {lr.lambda[u], v, u};
      } else {
        bad.witness = {u, v, lr.rho[u]};
      }
      return bad;
    }
  }
  return {};
}

OrderingCheck validate_transitive_ordering(const UndirectedGraph& g, const VertexOrdering& ord) {
  require_cover(g, ord);
  const Vertex n = g.vertex_count();
  if (n > kTransitiveValidatorMaxVertices) {
    throw BoundError("transitive-ordering validator is capped at " +
                     std::to_string(kTransitiveValidatorMaxVertices) + " vertices (got " +
                     std::to_string(n) + ")");
  }
  // Bit rows indexed by ordering position.
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> rows(words * static_cast<std::size_t>(n), 0);
  auto row = [&](Vertex p) { return rows.data() + words * static_cast<std::size_t>(p); };
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) {
      const Vertex p = ord.position(w);
      row(ord.position(u))[p / 64] |= std::uint64_t{1} << (p % 64);
    }
  }
  auto bit = [&](Vertex i, Vertex k) { return (row(i)[k / 64] >> (k % 64)) & 1U; };

  // Smallest j in (i, k) whose bit pattern satisfies `want(ij, jk)`.
  auto first_between = [&](Vertex i, Vertex k, bool both_set) -> Vertex {
    const std::uint64_t* ri = row(i);
    const std::uint64_t* rk = row(k);
    for (std::size_t wd = static_cast<std::size_t>(i + 1) / 64; wd <= static_cast<std::size_t>(k - 1) / 64;
         ++wd) {
      std::uint64_t m = both_set ? (ri[wd] & rk[wd]) : (~ri[wd] & ~rk[wd]);
      const Vertex base = static_cast<Vertex>(wd * 64);
      if (base < i + 1) m &= ~std::uint64_t{0} << (i + 1 - base);
      if (base + 63 > k - 1) {
        const int keep = k - 1 - base + 1;
        m &= keep >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << keep) - 1);
      }
      if (m != 0) return base + std::countr_zero(m);
    }
    return -1;
  };

  for (Vertex i = 0; i < n; ++i) {
    for (Vertex k = i + 2; k < n; ++k) {
      const bool ik = bit(i, k);
      const Vertex j = first_between(i, k, !ik);
      if (j < 0) continue;
      OrderingCheck bad;
      bad.ok = false;
      bad.witness = {ord.at(i), ord.at(j), ord.at(k)};
      bad.condition = ik ? "uw is an edge but neither uv nor vw is"
                         : "uv and vw are edges but uw is not";
      return bad;
    }
  }
  return {};
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
  const Vertex n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> comps;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace urm
