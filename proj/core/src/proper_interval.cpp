#include "urm/proper_interval.hpp"

#include <string>

#include "urm/errors.hpp"

namespace urm {

ProperContext::ProperContext(const UndirectedGraph& g, VertexOrdering ord)
    : g_(&g), ord_(std::move(ord)) {
  const Vertex n = g.vertex_count();
  if (ord_.size() != n) throw InvalidInput("ordering size does not match the graph");
  lr_ = compute_lambda_rho(g, ord_);
  if (auto check = validate_proper_ordering(g, ord_, lr_); !check) {
    const auto& w = check.witness;
    throw ValidationError("not a proper vertex ordering: triple (" + std::to_string(w[0]) + ", " +
                          std::to_string(w[1]) + ", " + std::to_string(w[2]) + ") violates '" +
                          std::string(check.condition) + "'");
  }

  lpos_of_rank_.resize(static_cast<std::size_t>(n));
  rpos_of_rank_.resize(static_cast<std::size_t>(n));
  for (Vertex p = 0; p < n; ++p) {
    const Vertex v = ord_.at(p);
    lpos_of_rank_[p] = ord_.position(lr_.lambda[v]);
    rpos_of_rank_[p] = ord_.position(lr_.rho[v]);
  }

  // Components are contiguous in a proper ordering; a block ends wherever
  // consecutive vertices are nonadjacent.
  block_end_.resize(static_cast<std::size_t>(n));
  for (Vertex p = n; p > 0; --p) {
    const Vertex i = p - 1;
    block_end_[i] = (i + 1 == n || rpos_of_rank_[i] == i) ? i + 1 : block_end_[i + 1];
  }

  std::size_t edges = 0;
  for (Vertex p = 0; p < n; ++p) edges += static_cast<std::size_t>(rpos_of_rank_[p] - p);
  if (edges != g.edge_count()) throw InternalError("edge count mismatch in proper context");
  memo_.assign(2 * static_cast<std::size_t>(n), Entry{});
}

bool ProperContext::adjacent(Vertex u, Vertex v) const {
  if (u == v) return false;
  const Vertex pv = ord_.position(v);
  return ord_.position(lr_.lambda[u]) <= pv && pv <= ord_.position(lr_.rho[u]);
}

bool ProperContext::pair_is_ur(const Edge& e, const Edge& f) const {
  if (e.shares_vertex(f)) return false;
  return !adjacent(ord_.left_of(e), ord_.left_of(f)) || !adjacent(ord_.right_of(e), ord_.right_of(f));
}

bool pair_is_ur_proper(const ProperContext& ctx, const Edge& e, const Edge& f) {
  return ctx.pair_is_ur(e, f);
}

ProperContext::Slot ProperContext::slot_of(const Edge& e) const {
  if (e.a < 0 || e.b >= g_->vertex_count()) throw InvalidInput("edge endpoint out of range");
  const Vertex lp = ord_.position(ord_.left_of(e));
  const Vertex rp = ord_.position(ord_.right_of(e));
  if (rp > rpos_of_rank_[lp]) {
    throw InvalidInput("edge " + std::to_string(e.a) + " " + std::to_string(e.b) +
                       " is not an edge of the graph");
  }
  return {lp, rp};
}

Edge ProperContext::edge_at(const Slot& s) const { return Edge::of(ord_.at(s.l), ord_.at(s.r)); }

ProperContext::Entry& ProperContext::entry(const Slot& s) {
  if (s.r == s.l + 1) return memo_[static_cast<std::size_t>(s.l)];
  if (s.l == lpos_of_rank_[s.r]) return memo_[static_cast<std::size_t>(g_->vertex_count() + s.r)];
  return extra_[static_cast<std::uint64_t>(s.l) << 32 | static_cast<std::uint32_t>(s.r)];
}

std::optional<ProperContext::Slot> ProperContext::sigma_l(Vertex lpos) const {
  const Vertex i = rpos_of_rank_[lpos];
  if (i + 2 >= block_end_[lpos]) return std::nullopt;
  return Slot{i + 1, i + 2};
}

std::optional<ProperContext::Slot> ProperContext::sigma_r(Vertex rpos) const {
  const Vertex i = rpos_of_rank_[rpos];
  if (i + 1 >= block_end_[rpos]) return std::nullopt;
  return Slot{lpos_of_rank_[i + 1], i + 1};
}

std::optional<ProperContext::Slot> ProperContext::next(const Slot& s) {
  switch (entry(s).state) {
    case State::kSigmaL: return sigma_l(s.l);
    case State::kSigmaR: return sigma_r(s.r);
    default: return std::nullopt;
  }
}

std::pair<std::optional<Edge>, std::optional<Edge>> ProperContext::successors(const Edge& e) const {
  const Slot s = slot_of(e);
  std::pair<std::optional<Edge>, std::optional<Edge>> out;
  if (auto t = sigma_l(s.l)) out.first = edge_at(*t);
  if (auto t = sigma_r(s.r)) out.second = edge_at(*t);
  return out;
}

void ProperContext::fill(const Slot& root) {
  std::vector<Slot> stack{root};
  while (!stack.empty()) {
    const Slot t = stack.back();
    Entry& et = entry(t);
    if (et.state >= State::kEnd) {
      stack.pop_back();
      continue;
    }
    const auto sl = sigma_l(t.l);
    const auto sr = sigma_r(t.r);
    if (et.state == State::kUnvisited) {
      et.state = State::kInProgress;
      for (const auto& c : {sl, sr}) {
        if (!c) continue;
        const State cs = entry(*c).state;
        if (cs == State::kInProgress) throw InternalError("cycle among successor edges");
        if (cs == State::kUnvisited) stack.push_back(*c);
      }
      continue;
    }
    const std::int32_t a = sl ? entry(*sl).size : 0;
    const std::int32_t b = sr ? entry(*sr).size : 0;
    if (sl && (!sr || a >= b)) {
      et = {1 + a, State::kSigmaL};
    } else if (sr) {
      et = {1 + b, State::kSigmaR};
    } else {
      et = {1, State::kEnd};
    }
    ++computed_;
    stack.pop_back();
  }
}

ProperContext::UEntry ProperContext::compute_u(const Edge& e) {
  const Slot s = slot_of(e);
  if (entry(s).state < State::kEnd) fill(s);
  UEntry out{entry(s).size, std::nullopt};
  if (auto t = next(s)) out.best = edge_at(*t);
  return out;
}

std::vector<Edge> ProperContext::chain(const Edge& e) {
  const Slot s = slot_of(e);
  if (entry(s).state < State::kEnd) fill(s);
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(entry(s).size));
  for (std::optional<Slot> cur = s; cur; cur = next(*cur)) out.push_back(edge_at(*cur));
  return out;
}

Matching solve_proper(const UndirectedGraph& g, const VertexOrdering& ord) {
  ProperContext ctx(g, ord);
  Matching m;
  for (Vertex p = 0; p < g.vertex_count(); p = ctx.block_end(p)) {
    if (ctx.block_end(p) - p < 2) continue;
    auto part = ctx.chain(Edge::of(ord.at(p), ord.at(p + 1)));
    m.edges.insert(m.edges.end(), part.begin(), part.end());
  }
  return m;
}

}  // namespace urm
