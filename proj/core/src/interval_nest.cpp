#include "urm/interval_nest.hpp"

#include <numeric>
#include <string>
#include <tuple>

#include "urm/errors.hpp"

namespace urm {

NestRep normalize_nest(const NestRep& rep) {
  struct Endpoint {
    Coord coord;
    int kind;  // 0 = L, 1 = l, 2 = r, 3 = R
    Vertex id;
    auto operator<=>(const Endpoint&) const = default;
  };
  std::vector<Endpoint> pts;
  pts.reserve(4 * rep.size());
  for (std::size_t u = 0; u < rep.size(); ++u) {
    const Nest& s = rep[u];
    if (!(s.L <= s.l && s.l <= s.r && s.r <= s.R)) {
      throw InvalidInput("nest of vertex " + std::to_string(u) + " violates L <= l <= r <= R");
    }
    const auto id = static_cast<Vertex>(u);
    pts.push_back({s.L, 0, id});
    pts.push_back({s.l, 1, id});
    pts.push_back({s.r, 2, id});
    pts.push_back({s.R, 3, id});
  }
  std::sort(pts.begin(), pts.end());
  NestRep out(rep.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Coord c = static_cast<Coord>(i) + 1;
    Nest& s = out[pts[i].id];
    switch (pts[i].kind) {
      case 0: s.L = c; break;
      case 1: s.l = c; break;
      case 2: s.r = c; break;
      default: s.R = c; break;
    }
  }
  return out;
}

NestRep add_dummies(const NestRep& rep) {
  const Coord n4 = 4 * static_cast<Coord>(rep.size());
  NestRep out = rep;
  out.push_back({-4, -3, -1, 0});
  out.push_back({-2, n4 + 1, n4 + 2, n4 + 3});
  return out;
}

bool is_strong_independent(const NestRep& rep, const std::vector<Vertex>& set) {
  for (Vertex v : set) {
    if (v < 0 || static_cast<std::size_t>(v) >= rep.size()) {
      throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    }
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Nest& a = rep[set[i]];
      const Nest& b = rep[set[j]];
      if (set[i] != set[j] && has_arc(a, b) && has_arc(b, a)) return false;
    }
  }
  return true;
}

std::vector<std::pair<Vertex, Vertex>> nest_arcs(const NestRep& rep) {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  const auto n = static_cast<Vertex>(rep.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && has_arc(rep[u], rep[v])) arcs.emplace_back(u, v);
    }
  }
  return arcs;
}

namespace {

constexpr int kKeyBits = 21;
constexpr std::int32_t kInProgress = -1;

}  // namespace

SisTable::SisTable(NestRep rep, SisGuard guard) : rep_(std::move(rep)), guard_(guard) {
  if (rep_.size() < 2) throw InvalidInput("SisTable needs the two sentinel vertices");
  if (rep_.size() >= (std::size_t{1} << kKeyBits)) {
    throw BoundError("SisTable supports fewer than 2^21 vertices");
  }
  by_l_.resize(rep_.size());
  std::iota(by_l_.begin(), by_l_.end(), 0);
  std::sort(by_l_.begin(), by_l_.end(), [&](Vertex a, Vertex b) {
    return std::tie(rep_[a].l, a) < std::tie(rep_[b].l, b);
  });
  l_rank_.resize(rep_.size());
  for (std::size_t i = 0; i < by_l_.size(); ++i) l_rank_[by_l_[i]] = static_cast<std::int32_t>(i);
}

std::optional<Vertex> SisTable::eta(Vertex x) const {
  const auto next = static_cast<std::size_t>(l_rank_[x]) + 1;
  if (next >= by_l_.size()) return std::nullopt;
  return by_l_[next];
}

bool SisTable::in_x(Vertex u, Vertex v, Vertex y) const {
  const Nest& U = rep_[u];
  const Nest& V = rep_[v];
  const Nest& Y = rep_[y];
  if (!(U.r < V.l && V.L < U.r)) return false;
  return U.r < Y.L && Y.L < Y.R && Y.R < V.l;
}

bool SisTable::in_y(Vertex u, Vertex v, Vertex x, Vertex y) const {
  const Nest& U = rep_[u];
  const Nest& V = rep_[v];
  const Nest& X = rep_[x];
  if (!(X.l < V.l)) return false;
  if (guard_ == SisGuard::kBracketed && !(U.r < X.l)) return false;
  return in_x(u, v, y) && rep_[y].l >= X.l;
}

std::vector<Vertex> SisTable::y_set(Vertex u, Vertex v, Vertex x) const {
  std::vector<Vertex> out;
  for (auto i = static_cast<std::size_t>(l_rank_[x]); i < by_l_.size(); ++i) {
    if (in_y(u, v, x, by_l_[i])) out.push_back(by_l_[i]);
  }
  return out;
}

std::uint64_t SisTable::key(Vertex u, Vertex v, Vertex x) const {
  return (static_cast<std::uint64_t>(u) << (2 * kKeyBits)) |
         (static_cast<std::uint64_t>(v) << kKeyBits) | static_cast<std::uint64_t>(x);
}

std::int32_t SisTable::compute(Vertex u, Vertex v, std::optional<Vertex> x) {
  if (!x) return 0;
  const std::uint64_t k = key(u, v, *x);
  if (auto it = memo_.find(k); it != memo_.end()) {
    if (it->second.size == kInProgress) throw InternalError("re-entered an S(u, v, x) in progress");
    return it->second.size;
  }
  memo_.emplace(k, Entry{kInProgress, Choice::kEmpty, -1});
  const Entry e = compute_entry(u, v, *x);
  memo_[k] = e;
  return e.size;
}

SisTable::Entry SisTable::compute_entry(Vertex u, Vertex v, Vertex x) {
  const Nest& X = rep_[x];
  const Nest& V = rep_[v];
  // Candidates of Y(u, v, x) have l_x <= l_y < l_v, a contiguous run of by_l_.
  const auto first = static_cast<std::size_t>(l_rank_[x]);
  std::size_t last = first;
  while (last < by_l_.size() && rep_[by_l_[last]].l < V.l) ++last;

  bool y_empty = true;
  for (std::size_t i = first; i < last && y_empty; ++i) y_empty = !in_y(u, v, x, by_l_[i]);
  if (y_empty) return {};

  const auto ex = eta(x);
  Entry best{compute(u, v, ex), Choice::kSkip, -1};
  if (in_x(u, v, x)) {
    const std::int32_t take = 1 + compute(x, v, ex);
    if (take > best.size) best = {take, Choice::kTakeRest, -1};
    for (std::size_t i = first; i < last; ++i) {
      const Vertex y = by_l_[i];
      const Nest& Y = rep_[y];
      if (!(Y.L < X.r && X.R < Y.l) || !in_y(u, v, x, y)) continue;
      const std::int32_t split = 1 + compute(x, y, ex) + compute(u, v, y);
      if (split > best.size) best = {split, Choice::kSplit, y};
    }
  }
  return best;
}

std::optional<SisTable::Entry> SisTable::entry(Vertex u, Vertex v, Vertex x) const {
  auto it = memo_.find(key(u, v, x));
  if (it == memo_.end() || it->second.size == kInProgress) return std::nullopt;
  return it->second;
}

std::vector<std::array<Vertex, 3>> SisTable::computed_triples() const {
  std::vector<std::array<Vertex, 3>> out;
  out.reserve(memo_.size());
  const std::uint64_t mask = (std::uint64_t{1} << kKeyBits) - 1;
  for (const auto& [k, e] : memo_) {
    if (e.size == kInProgress) continue;
    out.push_back({static_cast<Vertex>(k >> (2 * kKeyBits)), static_cast<Vertex>((k >> kKeyBits) & mask),
                   static_cast<Vertex>(k & mask)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SisTable::collect(Vertex u, Vertex v, std::optional<Vertex> x, std::vector<Vertex>& out) {
  // Iterative on the tail call S(u, v, .) to keep the stack shallow.
  while (x) {
    compute(u, v, x);
    const Entry e = *entry(u, v, *x);
    const auto ex = eta(*x);
    switch (e.choice) {
      case Choice::kEmpty:
        return;
      case Choice::kSkip:
        x = ex;
        break;
      case Choice::kTakeRest:
        out.push_back(*x);
        u = *x;
        x = ex;
        break;
      case Choice::kSplit:
        out.push_back(*x);
        collect(*x, e.split, ex, out);
        x = e.split;
        break;
    }
  }
}

std::vector<Vertex> SisTable::materialize(Vertex u, Vertex v, std::optional<Vertex> x) {
  std::vector<Vertex> out;
  collect(u, v, x, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> max_sis(const NestRep& rep, SisGuard guard) {
  SisTable table(add_dummies(normalize_nest(rep)), guard);
  const Vertex a = table.dummy_a();
  return table.materialize(a, table.dummy_b(), table.eta(a));
}

namespace {

class SisBruteforce {
 public:
  explicit SisBruteforce(const NestRep& rep) : rep_(rep) {}

  std::vector<Vertex> run() {
    visit(0);
    return best_;
  }

 private:
  void visit(Vertex i) {
    if (current_.size() > best_.size()) best_ = current_;
    const auto n = static_cast<Vertex>(rep_.size());
    for (Vertex j = i; j < n; ++j) {
      if (current_.size() + static_cast<std::size_t>(n - j) <= best_.size()) return;
      bool ok = true;
      for (Vertex w : current_) {
        if (has_arc(rep_[w], rep_[j]) && has_arc(rep_[j], rep_[w])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current_.push_back(j);
      visit(j + 1);
      current_.pop_back();
    }
  }

  const NestRep& rep_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

std::vector<Vertex> max_sis_bruteforce(const NestRep& rep) {
  if (rep.size() > static_cast<std::size_t>(kSisBruteforceMaxVertices)) {
    throw BoundError("brute-force strong independent set search is capped at " +
                     std::to_string(kSisBruteforceMaxVertices) + " vertices (got " +
                     std::to_string(rep.size()) + ")");
  }
  return SisBruteforce(rep).run();
}

}  // namespace urm
