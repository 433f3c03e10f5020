#pragma once

// Fixed fixtures, seeded generators and the consecutive-edge baseline.
// Every generator is a pure function of its arguments.

#include <cstdint>
#include <vector>

#include "urm/graph.hpp"
#include "urm/interval_nest.hpp"
#include "urm/matching.hpp"

namespace urm {

/// Seven-vertex proper interval graph whose maximum UR matching (size 3)
/// cannot be built from edges between consecutive vertices. Vertex labels
/// 1..7 are ids 0..6; the ordering is the identity.
struct Fig1Instance {
  UndirectedGraph graph;
  VertexOrdering order;
  Matching bold;            // {12, 35, 67}
  IntervalRep unit_rep;     // unit-length realization, lefts 0,1,5,9,12,16,18
  std::size_t expected_size = 3;
};
Fig1Instance fig1();

/// Eight-vertex bipartite permutation graph with a transitive ordering
/// (identity); labels 1..8 are ids 0..7.
struct Fig2Instance {
  UndirectedGraph graph;
  VertexOrdering order;
};
Fig2Instance fig2();

/// G_pi with edge ij iff (i - j)(pi(i) - pi(j)) < 0. `pi` is a permutation of 0..n-1.
UndirectedGraph permutation_graph(const std::vector<Vertex>& pi);

/// n intervals of length `length` with lefts uniform in [0, span], normalized.
IntervalRep gen_unit_intervals(Vertex n, std::uint64_t seed, Coord span, Coord length = 100);

/// n intervals with lefts uniform in [0, span] and lengths uniform in
/// [0, max_length], normalized. Containment allowed.
IntervalRep gen_intervals(Vertex n, std::uint64_t seed, Coord span, Coord max_length);

/// n nests with all four endpoints drawn from [0, span].
NestRep gen_nest(Vertex n, std::uint64_t seed, Coord span);

struct BipPermInstance {
  UndirectedGraph graph;
  VertexOrdering order;
};

/// Staircase construction: p left and q right vertices, each left vertex
/// adjacent to a window of consecutive right vertices, window starts and ends
/// nondecreasing. Ids are shuffled; the returned ordering is transitive
/// (checked when p + q <= kTransitiveValidatorMaxVertices).
BipPermInstance gen_bipperm(Vertex p, Vertex q, std::uint64_t seed);

/// Graph with a matching M whose only alternating cycle is Hamiltonian.
struct FamilyInstance {
  int k = 0;
  UndirectedGraph graph;
  Matching matching;
};

/// Cycle 1,2,4,...,k,k-1,k-3,...,3 plus chords (2i, 2i+1) for 1 <= i < k/2,
/// labels shifted to ids 0..k-1; k = 4 gives a plain C4. M alternates along
/// the cycle starting with (1,2). Throws InvalidInput unless k is even and >= 4.
FamilyInstance gen_family(int k);

/// Largest UR matching using only edges (order[i], order[i+1]), computed
/// exactly by a quadratic DP. Requires a proper ordering.
Matching consecutive_heuristic_baseline(const UndirectedGraph& g, const VertexOrdering& ord);

}  // namespace urm
