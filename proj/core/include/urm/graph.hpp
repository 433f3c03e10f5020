#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace urm {

using Vertex = std::int32_t;
using Coord = std::int64_t;

/// Undirected edge in canonical form (a < b).
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  /// Canonicalizes {u, v}. Throws InvalidInput when u == v.
  static Edge of(Vertex u, Vertex v);

  bool touches(Vertex v) const noexcept { return a == v || b == v; }
  bool shares_vertex(const Edge& o) const noexcept { return touches(o.a) || touches(o.b); }
  Vertex other(Vertex v) const noexcept { return v == a ? b : a; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 stored as sorted adjacency (CSR).
/// Immutable after construction.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(Vertex n);

  /// Duplicate edges collapse. Throws InvalidInput on loops or ids outside [0, n).
  UndirectedGraph(Vertex n, std::span<const Edge> edges);

  Vertex vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return adj_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex u) const {
    return {adj_.data() + offsets_[u], adj_.data() + offsets_[u + 1]};
  }
  std::size_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }

  /// O(log deg) lookup.
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges, canonical and sorted lexicographically. The index of an edge in
  /// this vector is its edge id.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  Vertex n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// Subgraph induced by `vertices`; vertex vertices[i] becomes i.
UndirectedGraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> vertices);

/// A total order on the vertices with O(1) rank lookup in both directions.
class VertexOrdering {
 public:
  VertexOrdering() = default;

  /// Throws InvalidInput unless `order` is a permutation of 0..n-1.
  explicit VertexOrdering(std::vector<Vertex> order);

  static VertexOrdering identity(Vertex n);

  Vertex size() const noexcept { return static_cast<Vertex>(order_.size()); }
  Vertex at(Vertex rank) const { return order_[rank]; }
  Vertex position(Vertex v) const { return pos_[v]; }
  std::span<const Vertex> order() const noexcept { return order_; }

  bool before(Vertex u, Vertex v) const { return pos_[u] < pos_[v]; }
  /// l(e): the endpoint that comes first.
  Vertex left_of(const Edge& e) const { return before(e.a, e.b) ? e.a : e.b; }
  /// r(e): the endpoint that comes last.
  Vertex right_of(const Edge& e) const { return before(e.a, e.b) ? e.b : e.a; }

  friend bool operator==(const VertexOrdering&, const VertexOrdering&) = default;

 private:
  std::vector<Vertex> order_;
  std::vector<Vertex> pos_;
};

/// Closed interval [left, right].
struct Interval {
  Coord left = 0;
  Coord right = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Interval representation: element u is I_u.
using IntervalRep = std::vector<Interval>;

/// Remaps all 2n endpoints to the distinct integers 1..2n, preserving the
/// intersection graph. At equal coordinates left endpoints rank before right
/// endpoints, then lower vertex id first. Throws InvalidInput if left > right.
IntervalRep normalize_intervals(const IntervalRep& rep);

/// Intersection graph of closed intervals, built by an endpoint sweep in
/// O(n log n + m).
UndirectedGraph intersection_graph(const IntervalRep& rep);

/// Orders vertices by left endpoint (ties by right endpoint, then id).
/// Throws ValidationError naming the pair when one interval strictly contains another.
VertexOrdering ordering_from_proper_rep(const IntervalRep& rep);

/// Outcome of an ordering validator. On failure `witness` holds a violating
/// triple in ordering order and `condition` names the broken rule.
struct OrderingCheck {
  bool ok = true;
  std::array<Vertex, 3> witness{};
  std::string_view condition;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that every closed neighbourhood is a contiguous run of the ordering. O(n + m).
OrderingCheck validate_proper_ordering(const UndirectedGraph& g, const VertexOrdering& ord);

inline constexpr Vertex kTransitiveValidatorMaxVertices = 2000;

/// Triple scan over all u < v < w. O(n^3); throws BoundError above
/// kTransitiveValidatorMaxVertices.
OrderingCheck validate_transitive_ordering(const UndirectedGraph& g, const VertexOrdering& ord);

/// Per-vertex first and last member of N(u) ∪ {u} under an ordering.
struct LambdaRho {
  std::vector<Vertex> lambda;
  std::vector<Vertex> rho;
};

LambdaRho compute_lambda_rho(const UndirectedGraph& g, const VertexOrdering& ord);

/// As above with `lr` already equal to compute_lambda_rho(g, ord).
OrderingCheck validate_proper_ordering(const UndirectedGraph& g, const VertexOrdering& ord,
                                       const LambdaRho& lr);

/// Connected components, each sorted ascending, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

}  // namespace urm
