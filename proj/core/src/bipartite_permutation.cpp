#include "urm/bipartite_permutation.hpp"

#include <algorithm>
#include <string>

#include "urm/errors.hpp"

namespace urm {
namespace {

[[noreturn]] void reject(const std::string& what) {
  throw ValidationError("not a bipartite permutation instance: " + what);
}

}  // namespace

BipPermContext::BipPermContext(const UndirectedGraph& g, VertexOrdering ord, bool trust_ordering)
    : g_(&g), ord_(std::move(ord)) {
  const Vertex n = g.vertex_count();
  if (ord_.size() != n) throw InvalidInput("ordering size does not match the graph");
  if (!trust_ordering && n <= kTransitiveValidatorMaxVertices) {
    if (auto check = validate_transitive_ordering(g, ord_); !check) {
      const auto& w = check.witness;
      throw ValidationError("not a transitive vertex ordering: triple (" + std::to_string(w[0]) +
                            ", " + std::to_string(w[1]) + ", " + std::to_string(w[2]) +
                            ") violates '" + std::string(check.condition) + "'");
    }
  }
  lr_ = compute_lambda_rho(g, ord_);

  side_.resize(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) == 0) {
      side_[u] = Side::kIsolated;
    } else if (lr_.lambda[u] == u) {
      side_[u] = Side::kLeft;
    } else if (lr_.rho[u] == u) {
      side_[u] = Side::kRight;
    } else {
      reject("vertex " + std::to_string(u) + " has neighbours on both sides");
    }
  }

  block_end_.resize(static_cast<std::size_t>(n));
  for (const auto& comp : connected_components(g)) {
    Vertex lo = n, hi = -1;
    for (Vertex v : comp) {
      lo = std::min(lo, ord_.position(v));
      hi = std::max(hi, ord_.position(v));
    }
    if (hi - lo + 1 != static_cast<Vertex>(comp.size())) {
      reject("component of vertex " + std::to_string(comp.front()) +
             " is not contiguous in the ordering");
    }
    for (Vertex p = lo; p <= hi; ++p) block_end_[p] = hi + 1;
  }

  right_before_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex p = 0; p < n; ++p) {
    right_before_[p + 1] = right_before_[p] + (side_[ord_.at(p)] == Side::kRight ? 1 : 0);
  }

  // A left vertex must see exactly the right vertices up to rho(u); this is
  // what makes the O(1) edge index below valid.
  offset_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex p = 0; p < n; ++p) {
    const Vertex u = ord_.at(p);
    std::size_t deg = 0;
    if (side_[u] == Side::kLeft) {
      const Vertex rp = ord_.position(lr_.rho[u]);
      deg = g.degree(u);
      if (deg != static_cast<std::size_t>(right_before_[rp + 1] - right_before_[p + 1])) {
        reject("neighbourhood of left vertex " + std::to_string(u) +
               " is not a contiguous run of right vertices");
      }
    }
    offset_[p + 1] = offset_[p] + deg;
  }
  if (offset_.back() != g.edge_count()) throw InternalError("edge count mismatch in bipartite context");

  edge_l_.resize(offset_.back());
  edge_r_.resize(offset_.back());
  for (Vertex p = 0; p < n; ++p) {
    const Vertex u = ord_.at(p);
    if (side_[u] != Side::kLeft) continue;
    for (Vertex w : g.neighbors(u)) {
      const Vertex q = ord_.position(w);
      const std::size_t k = edge_index(p, q);
      edge_l_[k] = p;
      edge_r_[k] = q;
    }
  }

  nu_pos_.assign(static_cast<std::size_t>(n), -1);
  Vertex next_left = -1;
  for (Vertex p = n - 1; p >= 0; --p) {
    if (block_end_[p] == p + 1) next_left = -1;
    nu_pos_[p] = next_left;
    if (side_[ord_.at(p)] == Side::kLeft) next_left = p;
  }

  size_.assign(offset_.back(), 0);
  best_.assign(offset_.back(), -1);
  state_.assign(offset_.back(), State::kUnvisited);
}

std::optional<Vertex> BipPermContext::gamma(Vertex u) const {
  if (side_[u] != Side::kLeft) return std::nullopt;
  // Edge offset_[p] is the first edge of u's window.
  return ord_.at(edge_r_[offset_[ord_.position(u)]]);
}

std::optional<Vertex> BipPermContext::nu(Vertex u) const {
  const Vertex p = nu_pos_[ord_.position(u)];
  if (p < 0) return std::nullopt;
  return ord_.at(p);
}

bool BipPermContext::adjacent(Vertex u, Vertex v) const {
  if (u == v || side_[u] == side_[v]) return false;
  if (side_[u] != Side::kLeft) std::swap(u, v);
  if (side_[u] != Side::kLeft || side_[v] != Side::kRight) return false;
  const Vertex pv = ord_.position(v);
  return ord_.position(u) < pv && pv <= ord_.position(lr_.rho[u]);
}

bool BipPermContext::pair_is_ur(const Edge& e, const Edge& f) const {
  if (e.shares_vertex(f)) return false;
  Vertex le = ord_.position(ord_.left_of(e)), re = ord_.position(ord_.right_of(e));
  Vertex lf = ord_.position(ord_.left_of(f)), rf = ord_.position(ord_.right_of(f));
  if (lf < le) {
    std::swap(le, lf);
    std::swap(re, rf);
  }
  if (re < lf) return true;
  if (re < rf) return !adjacent(ord_.at(le), ord_.at(rf));
  return false;
}

bool pair_is_ur_bp(const BipPermContext& ctx, const Edge& e, const Edge& f) {
  return ctx.pair_is_ur(e, f);
}

std::size_t BipPermContext::edge_index(Vertex lpos, Vertex rpos) const {
  return offset_[lpos] + static_cast<std::size_t>(right_before_[rpos + 1] - right_before_[lpos + 1]) - 1;
}

std::size_t BipPermContext::index_of(const Edge& e) const {
  if (e.a < 0 || e.b >= g_->vertex_count() || !adjacent(e.a, e.b)) {
    throw InvalidInput("edge " + std::to_string(e.a) + " " + std::to_string(e.b) +
                       " is not an edge of the graph");
  }
  return edge_index(ord_.position(ord_.left_of(e)), ord_.position(ord_.right_of(e)));
}

Edge BipPermContext::edge_at(std::size_t k) const {
  return Edge::of(ord_.at(edge_l_[k]), ord_.at(edge_r_[k]));
}

std::optional<std::size_t> BipPermContext::x_index(std::size_t k) const {
  const Vertex lp = edge_l_[k];
  const Vertex i = ord_.position(lr_.rho[ord_.at(lp)]);
  if (i + 1 >= block_end_[lp]) return std::nullopt;
  Vertex u = ord_.at(i + 1);
  if (side_[u] != Side::kRight) u = *gamma(u);
  return edge_index(ord_.position(lr_.lambda[u]), ord_.position(u));
}

std::optional<std::size_t> BipPermContext::y_index(std::size_t k) const {
  const Vertex np = nu_pos_[edge_r_[k]];
  if (np < 0) return std::nullopt;
  return offset_[np];  // (nu, gamma(nu)) is the first edge of nu's window
}

std::pair<std::optional<Edge>, std::optional<Edge>> BipPermContext::xy(const Edge& e) const {
  const std::size_t k = index_of(e);
  std::pair<std::optional<Edge>, std::optional<Edge>> out;
  if (auto x = x_index(k)) out.first = edge_at(*x);
  if (auto y = y_index(k)) out.second = edge_at(*y);
  return out;
}

void BipPermContext::fill(std::size_t root) {
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t t = stack.back();
    if (state_[t] == State::kDone) {
      stack.pop_back();
      continue;
    }
    const auto x = x_index(t);
    const auto y = y_index(t);
    if (state_[t] == State::kUnvisited) {
      state_[t] = State::kInProgress;
      for (const auto& c : {x, y}) {
        if (!c) continue;
        if (state_[*c] == State::kInProgress) throw InternalError("cycle among successor edges");
        if (state_[*c] == State::kUnvisited) stack.push_back(*c);
      }
      continue;
    }
    const std::int32_t a = x ? size_[*x] : 0;
    const std::int32_t b = y ? size_[*y] : 0;
    if (x && (!y || a >= b)) {
      best_[t] = static_cast<std::int32_t>(*x);
      size_[t] = 1 + a;
    } else if (y) {
      best_[t] = static_cast<std::int32_t>(*y);
      size_[t] = 1 + b;
    } else {
      size_[t] = 1;
    }
    state_[t] = State::kDone;
    ++computed_;
    stack.pop_back();
  }
}

BipPermContext::UEntry BipPermContext::compute_u(const Edge& e) {
  const std::size_t k = index_of(e);
  if (state_[k] != State::kDone) fill(k);
  UEntry out{size_[k], std::nullopt};
  if (best_[k] >= 0) out.best = edge_at(static_cast<std::size_t>(best_[k]));
  return out;
}

std::vector<Edge> BipPermContext::chain(const Edge& e) {
  const std::size_t k = index_of(e);
  if (state_[k] != State::kDone) fill(k);
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_[k]));
  for (std::int32_t cur = static_cast<std::int32_t>(k); cur >= 0; cur = best_[cur]) {
    out.push_back(edge_at(static_cast<std::size_t>(cur)));
  }
  return out;
}

Matching solve_bipperm(const UndirectedGraph& g, const VertexOrdering& ord, bool trust_ordering) {
  BipPermContext ctx(g, ord, trust_ordering);
  Matching m;
  for (Vertex p = 0; p < g.vertex_count(); p = ctx.block_end(p)) {
    const Vertex v1 = ord.at(p);
    if (ctx.side(v1) == Side::kIsolated) continue;
    auto part = ctx.chain(Edge::of(v1, *ctx.gamma(v1)));
    m.edges.insert(m.edges.end(), part.begin(), part.end());
  }
  return m;
}

}  // namespace urm
