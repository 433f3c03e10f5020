#pragma once

#include <algorithm>
#include <vector>

#include "urm/graph.hpp"

namespace urm {

/// A set of edges. Solvers return edges in a solver-specific order; use
/// `canonical()` for the sorted-by-(a, b) form written to files.
struct Matching {
  std::vector<Edge> edges;

  std::size_t size() const noexcept { return edges.size(); }
  bool empty() const noexcept { return edges.empty(); }

  Matching canonical() const {
    Matching m{edges};
    std::sort(m.edges.begin(), m.edges.end());
    return m;
  }

  /// V(M), ascending.
  std::vector<Vertex> matched_vertices() const {
    std::vector<Vertex> vs;
    vs.reserve(2 * edges.size());
    for (const Edge& e : edges) {
      vs.push_back(e.a);
      vs.push_back(e.b);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
  }

  friend bool operator==(const Matching& x, const Matching& y) {
    return x.canonical().edges == y.canonical().edges;
  }
};

}  // namespace urm
