#pragma once

// Maximum uniquely restricted matching in bipartite permutation graphs.
//
// Works on a transitive vertex ordering. In each component every vertex is a
// left vertex (all neighbours after it) or a right vertex (all neighbours
// before it), so every edge runs from a left l(e) to a right r(e). The chain
// U(e) continues with x(e) or y(e), whichever carries the longer chain.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "urm/graph.hpp"
#include "urm/matching.hpp"

namespace urm {

enum class Side : std::uint8_t { kIsolated, kLeft, kRight };

class BipPermContext {
 public:
  struct UEntry {
    std::int32_t size = 0;
    std::optional<Edge> best;
  };

  /// Checks the ordering and classifies sides; throws ValidationError naming
  /// a witness when `g` under `ord` is not a bipartite permutation instance.
  /// The O(n^3) transitive-ordering validator runs only when `trust_ordering`
  /// is false and n <= kTransitiveValidatorMaxVertices; the O(n + m) side,
  /// contiguity and neighbourhood-window checks always run. Keeps a reference
  /// to `g`.
  BipPermContext(const UndirectedGraph& g, VertexOrdering ord, bool trust_ordering = false);

  const UndirectedGraph& graph() const noexcept { return *g_; }
  const VertexOrdering& ordering() const noexcept { return ord_; }
  const LambdaRho& lambda_rho() const noexcept { return lr_; }

  Side side(Vertex u) const { return side_[u]; }
  /// First neighbour of a left vertex.
  std::optional<Vertex> gamma(Vertex u) const;
  /// Next left vertex strictly after u within its component.
  std::optional<Vertex> nu(Vertex u) const;
  Vertex block_end(Vertex p) const { return block_end_[p]; }

  /// O(1) adjacency through the left vertex's window.
  bool adjacent(Vertex u, Vertex v) const;

  /// {e, f} is a uniquely restricted matching (three-case test on the
  /// relative positions of the endpoints). False unless e, f are disjoint.
  bool pair_is_ur(const Edge& e, const Edge& f) const;

  /// (x(e), y(e)). Throws InvalidInput if e is not an edge.
  std::pair<std::optional<Edge>, std::optional<Edge>> xy(const Edge& e) const;

  /// Memoized |U(e)|; ties go to x(e).
  UEntry compute_u(const Edge& e);

  /// U(e), edges by increasing position of l.
  std::vector<Edge> chain(const Edge& e);

  std::size_t computed_count() const noexcept { return computed_; }

 private:
  std::size_t edge_index(Vertex lpos, Vertex rpos) const;
  std::size_t index_of(const Edge& e) const;
  Edge edge_at(std::size_t k) const;
  std::optional<std::size_t> x_index(std::size_t k) const;
  std::optional<std::size_t> y_index(std::size_t k) const;
  void fill(std::size_t root);

  enum class State : std::uint8_t { kUnvisited, kInProgress, kDone };

  const UndirectedGraph* g_;
  VertexOrdering ord_;
  LambdaRho lr_;
  std::vector<Side> side_;       // by vertex
  std::vector<Vertex> block_end_;  // by position
  std::vector<Vertex> nu_pos_;     // by position, -1 if absent
  std::vector<Vertex> right_before_;  // right vertices at positions < p
  std::vector<std::size_t> offset_;   // by position
  std::vector<Vertex> edge_l_;
  std::vector<Vertex> edge_r_;
  std::vector<std::int32_t> size_;
  std::vector<std::int32_t> best_;
  std::vector<State> state_;
  std::size_t computed_ = 0;
};

bool pair_is_ur_bp(const BipPermContext& ctx, const Edge& e, const Edge& f);

/// Maximum UR matching: U(v_1 gamma(v_1)) per component, isolated vertices
/// skipped. O(n + m) plus validation.
Matching solve_bipperm(const UndirectedGraph& g, const VertexOrdering& ord,
                       bool trust_ordering = false);

}  // namespace urm
