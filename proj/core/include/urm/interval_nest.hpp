#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "urm/graph.hpp"

namespace urm {

/// Interval pair of one vertex: S = [L, R] (outer), T = [l, r] (inner, T ⊆ S).
struct Nest {
  Coord L = 0;
  Coord l = 0;
  Coord r = 0;
  Coord R = 0;

  friend bool operator==(const Nest&, const Nest&) = default;
};

/// Interval nest representation; element u is (S_u, T_u).
using NestRep = std::vector<Nest>;

/// Arc (u, v) exists iff S_u ∩ T_v is nonempty.
inline bool has_arc(const Nest& u, const Nest& v) noexcept {
  return std::max(u.L, v.l) <= std::min(u.R, v.r);
}

/// Remaps all 4n endpoints to distinct integers in [1, 4n]. Ties: L, then l,
/// then r, then R, then vertex id. Every arc, non-arc and nesting survives.
/// Throws InvalidInput unless L <= l <= r <= R for every vertex.
NestRep normalize_nest(const NestRep& rep);

/// Appends the two sentinel vertices a (index n) and b (index n + 1) to a
/// representation normalized to [1, 4n].
NestRep add_dummies(const NestRep& rep);

/// True iff no two members have arcs in both directions.
bool is_strong_independent(const NestRep& rep, const std::vector<Vertex>& set);

/// Materialized arc list (u, v), sorted. For oracles and export only.
std::vector<std::pair<Vertex, Vertex>> nest_arcs(const NestRep& rep);

/// Window guard used by Y(u, v, x).
///
/// kLower requires only l_x < l_v, which makes X(u, v) = Y(u, v, eta(u))
/// hold and the DP exact. kBracketed requires r_u < l_x < l_v. With it,
/// Y(x, v, eta(x)) is empty whenever l_eta(x) < r_x, so that identity fails
/// and the DP can miss the optimum (three nests suffice).
enum class SisGuard : std::uint8_t { kLower, kBracketed };

/// Memoized strong-independent-set DP over vertex triples (u, v, x).
///
/// Works on a normalized representation with the two sentinels already
/// appended. Entries are created only for triples reached from the root call,
/// and each stores its size together with the choice that produced it, so
/// the vertex set itself is rebuilt on demand.
class SisTable {
 public:
  /// How S(u, v, x) was obtained.
  enum class Choice : std::uint8_t {
    kEmpty,     // Y(u, v, x) is empty
    kSkip,      // S(u, v, eta(x))
    kTakeRest,  // {x} ∪ S(x, v, eta(x))
    kSplit,     // {x} ∪ S(x, y, eta(x)) ∪ S(u, v, y)
  };

  struct Entry {
    std::int32_t size = 0;
    Choice choice = Choice::kEmpty;
    Vertex split = -1;  // y for kSplit
  };

  /// `rep` must be normalized and carry the sentinels (see add_dummies).
  explicit SisTable(NestRep rep, SisGuard guard = SisGuard::kLower);

  Vertex vertex_count() const noexcept { return static_cast<Vertex>(rep_.size()); }
  Vertex dummy_a() const noexcept { return vertex_count() - 2; }
  Vertex dummy_b() const noexcept { return vertex_count() - 1; }
  const NestRep& rep() const noexcept { return rep_; }
  SisGuard guard() const noexcept { return guard_; }

  /// Vertex with the next larger l, if any.
  std::optional<Vertex> eta(Vertex x) const;

  bool in_x(Vertex u, Vertex v, Vertex y) const;
  bool in_y(Vertex u, Vertex v, Vertex x, Vertex y) const;

  /// Y(u, v, x) materialized, ascending by l. For tests.
  std::vector<Vertex> y_set(Vertex u, Vertex v, Vertex x) const;

  /// |S(u, v, x)|, computing and memoizing as needed. An absent x yields 0.
  std::int32_t compute(Vertex u, Vertex v, std::optional<Vertex> x);

  /// S(u, v, x) as a vertex set, ascending by id. Computes if needed.
  std::vector<Vertex> materialize(Vertex u, Vertex v, std::optional<Vertex> x);

  /// Memo entry for a triple already computed.
  std::optional<Entry> entry(Vertex u, Vertex v, Vertex x) const;

  /// Triples currently in the memo.
  std::vector<std::array<Vertex, 3>> computed_triples() const;

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  std::uint64_t key(Vertex u, Vertex v, Vertex x) const;
  Entry compute_entry(Vertex u, Vertex v, Vertex x);
  void collect(Vertex u, Vertex v, std::optional<Vertex> x, std::vector<Vertex>& out);

  NestRep rep_;
  SisGuard guard_;
  std::vector<Vertex> by_l_;        // vertices sorted by l
  std::vector<std::int32_t> l_rank_;  // inverse of by_l_
  std::unordered_map<std::uint64_t, Entry> memo_;
};

/// Maximum strong independent set (ids ascending) of the interval nest digraph
/// given by `rep`. O(n^4) worst case. Exact only with SisGuard::kLower.
std::vector<Vertex> max_sis(const NestRep& rep, SisGuard guard = SisGuard::kLower);

inline constexpr Vertex kSisBruteforceMaxVertices = 20;

/// Exhaustive search; lexicographically smallest maximizer. Throws BoundError
/// above kSisBruteforceMaxVertices.
std::vector<Vertex> max_sis_bruteforce(const NestRep& rep);

}  // namespace urm
