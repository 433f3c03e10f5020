#pragma once

// Ground-truth checks for uniquely restricted matchings.
//
// A matching M is uniquely restricted (UR) when no other matching covers
// exactly V(M), i.e. when G[V(M)] has exactly one perfect matching. The
// brute-force routines here are bounded and refuse larger inputs with a
// BoundError instead of truncating.

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "urm/graph.hpp"
#include "urm/matching.hpp"

namespace urm {

inline constexpr Vertex kOracleMaxVertices = 40;
inline constexpr std::size_t kBruteforceMaxEdges = 24;
inline constexpr Vertex kCycleEnumerationMaxVertices = 24;

/// True iff the edges are pairwise vertex-disjoint. Throws InvalidInput when
/// an edge is not in E(G).
bool is_matching(const UndirectedGraph& g, const Matching& m);

/// Number of perfect matchings of g, saturated at `cap`. Branches on the
/// lowest-id uncovered vertex. Throws BoundError above kOracleMaxVertices.
std::uint64_t count_perfect_matchings(const UndirectedGraph& g, std::uint64_t cap);

/// G[V(M)] has exactly one perfect matching. Throws InvalidInput if M is not
/// a matching of g.
bool is_ur_oracle(const UndirectedGraph& g, const Matching& m);

/// Both edges lie on a common 4-cycle: every endpoint of e has a neighbour
/// among the endpoints of f and vice versa. Throws InvalidInput when the
/// edges share a vertex.
bool pair_has_alt_c4(const UndirectedGraph& g, const Edge& e, const Edge& f);

/// First pair (in edge order of M) lying on an alternating 4-cycle.
std::optional<std::pair<Edge, Edge>> find_alt_c4_pair(const UndirectedGraph& g, const Matching& m);

/// No pair of M lies on a 4-cycle. Decides UR for interval graphs and
/// bipartite permutation graphs; the caller asserts class membership.
bool is_ur_c4free(const UndirectedGraph& g, const Matching& m);

/// Class-specific test "is {e, f} a uniquely restricted matching".
using PairPredicate = std::function<bool(const Edge&, const Edge&)>;

/// Sorts M by position of l(e) and returns the first adjacent pair rejected
/// by `pair_ok`, if any.
std::optional<std::pair<Edge, Edge>> find_consecutive_violation(const UndirectedGraph& g,
                                                                const VertexOrdering& ord,
                                                                const Matching& m,
                                                                const PairPredicate& pair_ok);

/// UR test that only checks pairs adjacent in l-order. Valid for proper
/// interval orderings and transitive orderings of bipartite permutation graphs.
bool is_ur_consecutive(const UndirectedGraph& g, const VertexOrdering& ord, const Matching& m,
                       const PairPredicate& pair_ok);

/// Maximum UR matching by exhaustive search over matchings (edges in id
/// order); ties go to the lexicographically smallest edge-id set. Throws
/// BoundError above kBruteforceMaxEdges edges.
Matching max_urm_bruteforce(const UndirectedGraph& g);

/// Cyclic vertex sequence; consecutive vertices (and last, first) are adjacent.
struct AlternatingCycle {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  friend auto operator<=>(const AlternatingCycle&, const AlternatingCycle&) = default;
};

/// All simple M-alternating cycles of length <= max_len, each once, in
/// canonical form: starts at its smallest vertex, smaller neighbour second.
/// Sorted by (length, vertices). Throws BoundError above
/// kCycleEnumerationMaxVertices vertices.
std::vector<AlternatingCycle> enumerate_alternating_cycles(const UndirectedGraph& g,
                                                           const Matching& m, std::size_t max_len);

}  // namespace urm
