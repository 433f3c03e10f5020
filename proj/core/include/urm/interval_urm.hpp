#pragma once

// Maximum uniquely restricted matching in interval graphs through strong
// independent sets of an interval nest digraph: edge uv becomes the nest
// (I_u ∪ I_v, I_u ∩ I_v).

#include <cstddef>
#include <span>
#include <vector>

#include "urm/graph.hpp"
#include "urm/interval_nest.hpp"
#include "urm/matching.hpp"

namespace urm {

/// Nest vertex i stands for edges[i].
struct EdgeNestMap {
  NestRep nest;
  std::vector<Edge> edges;
};

/// Builds the nest digraph of the edges of `g`, the intersection graph of
/// `rep`. Edges are numbered by (L_e, R_e, a, b) over the normalized
/// intervals; the nest is normalized. Throws InvalidInput if `g` is not the
/// intersection graph of `rep`.
EdgeNestMap build_nest_from_intervals(const IntervalRep& rep, const UndirectedGraph& g);

inline constexpr std::size_t kIntervalUrmDefaultMaxEdges = 2000;

/// Maximum UR matching of the intersection graph of `rep`, edges canonical.
/// O(m^4); throws BoundError when m exceeds `max_edges`.
Matching solve_interval_urm(const IntervalRep& rep,
                            std::size_t max_edges = kIntervalUrmDefaultMaxEdges,
                            SisGuard guard = SisGuard::kLower);

inline constexpr std::size_t kReductionCheckMaxEdges = 16;

/// For each sample (indices into the EdgeNestMap built from rep and g):
/// strong independence in the nest digraph agrees with "matching and UR" in
/// g. Throws BoundError above kReductionCheckMaxEdges edges.
bool reduction_faithful(const IntervalRep& rep, const UndirectedGraph& g,
                        std::span<const std::vector<std::size_t>> samples);

}  // namespace urm
