#pragma once

// Maximum uniquely restricted matching in proper interval graphs.
//
// Works on a proper vertex ordering v_1 < ... < v_n. Every edge e has a left
// successor sigma_l(e) and a right successor sigma_r(e) (either may be
// absent); U(e) is the longer of the two chains hanging off them plus e
// itself, and U(v_1 v_2) is optimal on a connected graph.

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "urm/graph.hpp"
#include "urm/matching.hpp"

namespace urm {

class ProperContext {
 public:
  struct UEntry {
    std::int32_t size = 0;
    std::optional<Edge> best;  // next edge of the chain
  };

  /// Validates `ord` (O(n + m)) and throws ValidationError with the witness
  /// triple when it is not a proper vertex ordering of `g`. Keeps a reference
  /// to `g`; the graph must outlive the context.
  ProperContext(const UndirectedGraph& g, VertexOrdering ord);

  const UndirectedGraph& graph() const noexcept { return *g_; }
  const VertexOrdering& ordering() const noexcept { return ord_; }
  const LambdaRho& lambda_rho() const noexcept { return lr_; }

  /// One past the last position of the component containing position p.
  Vertex block_end(Vertex p) const { return block_end_[p]; }

  /// Adjacency by ordering positions, O(1).
  bool adjacent(Vertex u, Vertex v) const;

  /// {e, f} is a uniquely restricted matching: false unless e, f are disjoint;
  /// otherwise true iff l(e), l(f) or r(e), r(f) are nonadjacent.
  bool pair_is_ur(const Edge& e, const Edge& f) const;

  /// (sigma_l(e), sigma_r(e)). Throws InvalidInput if e is not an edge.
  std::pair<std::optional<Edge>, std::optional<Edge>> successors(const Edge& e) const;

  /// Memoized |U(e)| and successor choice. Ties go to sigma_l.
  UEntry compute_u(const Edge& e);

  /// U(e) with edges in increasing position order.
  std::vector<Edge> chain(const Edge& e);

  /// Number of U entries computed so far.
  std::size_t computed_count() const noexcept { return computed_; }

 private:
  /// An edge by ordering positions, l < r.
  struct Slot {
    Vertex l;
    Vertex r;
  };

  // Memo state and successor choice.
  enum class State : std::uint8_t { kUnvisited, kInProgress, kEnd, kSigmaL, kSigmaR };

  struct Entry {
    std::int32_t size = 0;
    State state = State::kUnvisited;
  };

  Slot slot_of(const Edge& e) const;
  Edge edge_at(const Slot& s) const;
  std::optional<Slot> sigma_l(Vertex lpos) const;
  std::optional<Slot> sigma_r(Vertex rpos) const;
  std::optional<Slot> next(const Slot& s);
  Entry& entry(const Slot& s);
  void fill(const Slot& root);

  const UndirectedGraph* g_;
  VertexOrdering ord_;
  LambdaRho lr_;
  std::vector<Vertex> lpos_of_rank_;  // lambda position by rank
  std::vector<Vertex> rpos_of_rank_;  // rho position by rank
  std::vector<Vertex> block_end_;
  // Every successor is (p, p + 1) or (lambda position of q, q), so the memo
  // holds 2n slots; other edges only occur as roots and go to extra_.
  std::vector<Entry> memo_;
  std::unordered_map<std::uint64_t, Entry> extra_;
  std::size_t computed_ = 0;
};

/// Free-function form of ProperContext::pair_is_ur.
bool pair_is_ur_proper(const ProperContext& ctx, const Edge& e, const Edge& f);

/// Maximum UR matching: U(v_1 v_2) per component, edges by position of l(e).
/// Throws ValidationError when `ord` is not proper. O(n + m).
Matching solve_proper(const UndirectedGraph& g, const VertexOrdering& ord);

}  // namespace urm
