#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "urm/bipartite_permutation.hpp"
#include "urm/errors.hpp"
#include "urm/instances.hpp"
#include "urm/oracle.hpp"

using namespace urm;

namespace {

// Figure labels 1..n are ids 0..n-1.
Edge lab(Vertex u, Vertex v) { return Edge::of(u - 1, v - 1); }

VertexOrdering identity(Vertex n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  return VertexOrdering(order);
}

UndirectedGraph graph_of(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> es) {
  std::vector<Edge> edges;
  for (auto [u, v] : es) edges.push_back(Edge::of(u, v));
  return UndirectedGraph(n, edges);
}

BipPermInstance random_bp(std::mt19937_64& rng, Vertex max_side) {
  const Vertex p = 1 + static_cast<Vertex>(rng() % max_side);
  const Vertex q = 1 + static_cast<Vertex>(rng() % max_side);
  return gen_bipperm(p, q, rng());
}

}  // namespace

TEST_SUITE("bipperm-urm") {

TEST_CASE("side classification examples") {
  const auto f = fig2();
  const BipPermContext ctx(f.graph, f.order);
  for (Vertex v = 1; v <= 8; ++v) {
    const Side expected = (v == 1 || v == 4) ? Side::kLeft : Side::kRight;
    CHECK(ctx.side(v - 1) == expected);
  }
  auto k2 = graph_of(2, {{0, 1}});
  const BipPermContext c2(k2, identity(2));
  CHECK(c2.side(0) == Side::kLeft);
  CHECK(c2.side(1) == Side::kRight);

  auto tri = graph_of(3, {{0, 1}, {1, 2}, {0, 2}});
  try {
    BipPermContext bad(tri, identity(3));
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("not a bipartite permutation instance") != std::string::npos);
  }
}

TEST_CASE("pair_is_ur_bp examples") {
  const auto f = fig2();
  const BipPermContext ctx(f.graph, f.order);
  CHECK(pair_is_ur_bp(ctx, lab(1, 2), lab(4, 5)));
  CHECK_FALSE(pair_is_ur_bp(ctx, lab(1, 5), lab(4, 6)));
  CHECK_FALSE(pair_is_ur_bp(ctx, lab(1, 6), lab(4, 5)));
  CHECK_FALSE(pair_is_ur_bp(ctx, lab(4, 5), lab(1, 6)));
  CHECK_FALSE(pair_is_ur_bp(ctx, lab(1, 5), lab(4, 5)));
}

TEST_CASE("x and y examples") {
  const auto f = fig2();
  const BipPermContext ctx(f.graph, f.order);
  auto [x, y] = ctx.xy(lab(1, 2));
  REQUIRE(x);
  REQUIRE(y);
  CHECK(*x == lab(4, 7));
  CHECK(*y == lab(4, 5));
  auto [x2, y2] = ctx.xy(lab(4, 7));
  CHECK_FALSE(x2);
  CHECK_FALSE(y2);
  CHECK(ctx.gamma(0) == 1);
  CHECK(ctx.nu(1) == 3);
  CHECK_FALSE(ctx.nu(6));

  auto k2 = graph_of(2, {{0, 1}});
  const BipPermContext c2(k2, identity(2));
  auto [kx, ky] = c2.xy(Edge::of(0, 1));
  CHECK_FALSE(kx);
  CHECK_FALSE(ky);
}

TEST_CASE("compute_u examples") {
  const auto f = fig2();
  BipPermContext ctx(f.graph, f.order);
  CHECK(ctx.compute_u(lab(4, 7)).size == 1);
  CHECK(ctx.compute_u(lab(4, 5)).size == 1);
  CHECK(ctx.compute_u(lab(1, 2)).size == 2);
  // Tie between x and y: x wins.
  CHECK(ctx.compute_u(lab(1, 2)).best == lab(4, 7));

  auto k2 = graph_of(2, {{0, 1}});
  BipPermContext c2(k2, identity(2));
  CHECK(c2.compute_u(Edge::of(0, 1)).size == 1);

  // Chains stay inside a component; the union happens in solve_bipperm.
  auto two = graph_of(4, {{0, 1}, {2, 3}});
  BipPermContext c4(two, identity(4));
  CHECK(c4.chain(Edge::of(0, 1)) == std::vector<Edge>{Edge::of(0, 1)});
  CHECK(solve_bipperm(two, identity(4)) == Matching{{Edge::of(0, 1), Edge::of(2, 3)}});
}

TEST_CASE("solve_bipperm examples") {
  const auto f = fig2();
  auto m = solve_bipperm(f.graph, f.order);
  CHECK(m.size() == 2);
  CHECK(m == Matching{{lab(1, 2), lab(4, 7)}});
  CHECK(max_urm_bruteforce(f.graph).size() == 2);
  CHECK(solve_bipperm(graph_of(2, {{0, 1}}), identity(2)).size() == 1);
  CHECK(solve_bipperm(graph_of(4, {{0, 1}, {0, 2}, {0, 3}}), identity(4)).size() == 1);
  CHECK(solve_bipperm(UndirectedGraph(3), identity(3)).empty());
}

TEST_CASE("ordering validation") {
  // Star ordered with the centre in the middle: the centre is mixed.
  auto star = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK_THROWS_AS(solve_bipperm(star, VertexOrdering(std::vector<Vertex>{1, 0, 2, 3})),
                  ValidationError);
  // C4 ordered 0,1,2,3 with edges 01,12,23,30: vertex 1 is mixed.
  auto c4 = graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK_THROWS_AS(solve_bipperm(c4, identity(4)), ValidationError);
  // Left 0 adjacent to right 2 but not to the earlier right 1: not transitive.
  auto gap = graph_of(4, {{0, 2}, {3, 1}});
  CHECK_THROWS_AS(solve_bipperm(gap, VertexOrdering(std::vector<Vertex>{0, 3, 1, 2})),
                  ValidationError);
}

TEST_CASE("property: generated instances have transitive orderings") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_bp(rng, 8);
    CHECK(testing::transitive_by_triples(inst.graph, inst.order));
  }
}

TEST_CASE("property: optimal on generated instances") {
  std::mt19937_64 rng(52);
  int tested = 0;
  while (tested < 220) {
    auto inst = random_bp(rng, 7);
    if (inst.graph.edge_count() > 20) continue;
    ++tested;
    auto m = solve_bipperm(inst.graph, inst.order);
    CHECK(m.size() == max_urm_bruteforce(inst.graph).size());
    CHECK(is_ur_oracle(inst.graph, m));
  }
}

TEST_CASE("property: outputs pass the consecutive check") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_bp(rng, 25);
    const BipPermContext ctx(inst.graph, inst.order);
    auto pred = [&](const Edge& e, const Edge& g) { return ctx.pair_is_ur(e, g); };
    auto m = solve_bipperm(inst.graph, inst.order);
    CHECK(is_ur_consecutive(inst.graph, inst.order, m, pred));
    if (m.matched_vertices().size() <= 40) CHECK(is_ur_oracle(inst.graph, m));
  }
}

TEST_CASE("property: pair predicate equals the oracle on all edge pairs") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_bp(rng, 6);
    const BipPermContext ctx(inst.graph, inst.order);
    const auto edges = inst.graph.edges();
    for (const Edge& e : edges)
      for (const Edge& f : edges) {
        if (e == f) continue;
        const bool expected =
            !e.shares_vertex(f) && testing::naive_is_ur(inst.graph, Matching{{e, f}});
        CHECK(ctx.pair_is_ur(e, f) == expected);
      }
  }
}

TEST_CASE("property: left vertices underneath an edge see its right end") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = random_bp(rng, 10);
    const BipPermContext ctx(inst.graph, inst.order);
    const auto& ord = inst.order;
    for (const Edge& e : inst.graph.edges()) {
      const Vertex lp = ord.position(ord.left_of(e)), rp = ord.position(ord.right_of(e));
      for (Vertex p = lp; p <= rp; ++p) {
        const Vertex u = ord.at(p);
        if (ctx.side(u) == Side::kLeft) CHECK(inst.graph.has_edge(u, ord.right_of(e)));
      }
    }
  }
}

TEST_CASE("property: outer pair failure propagates to both inner pairs") {
  std::mt19937_64 rng(56);
  for (int trial = 0; trial < 60; ++trial) {
    auto inst = random_bp(rng, 6);
    const BipPermContext ctx(inst.graph, inst.order);
    const auto& ord = inst.order;
    const auto edges = inst.graph.edges();
    auto lp = [&](const Edge& e) { return ord.position(ord.left_of(e)); };
    auto rp = [&](const Edge& e) { return ord.position(ord.right_of(e)); };
    for (const Edge& a : edges)
      for (const Edge& b : edges)
        for (const Edge& c : edges) {
          if (a == b || b == c || a == c) continue;
          if (!(lp(a) <= lp(b) && lp(b) <= lp(c) && rp(a) <= rp(b) && rp(b) <= rp(c))) continue;
          if (ctx.pair_is_ur(a, c)) continue;
          CHECK_FALSE(ctx.pair_is_ur(a, b));
          CHECK_FALSE(ctx.pair_is_ur(b, c));
        }
  }
}

TEST_CASE("property: UR iff no alternating C4 on all matchings") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 80; ++trial) {
    auto inst = random_bp(rng, 5);
    for (const auto& m : testing::all_matchings(inst.graph))
      CHECK(is_ur_oracle(inst.graph, m) == is_ur_c4free(inst.graph, m));
  }
}

TEST_CASE("property: permutation graphs that are bipartite solve optimally") {
  // Independent route to instances: G_pi for random pi, kept when bipartite,
  // ordered by a transitive ordering found by brute force over small n.
  std::mt19937_64 rng(58);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 40; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 5);
    std::vector<Vertex> pi(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) pi[v] = v;
    std::shuffle(pi.begin(), pi.end(), rng);
    auto g = permutation_graph(pi);
    std::vector<Vertex> order = pi;
    std::sort(order.begin(), order.end());
    do {
      VertexOrdering ord(order);
      if (!testing::transitive_by_triples(g, ord)) continue;
      try {
        auto m = solve_bipperm(g, ord);
        CHECK(m.size() == max_urm_bruteforce(g).size());
        ++tested;
      } catch (const ValidationError&) {
        // not bipartite, or a disconnected layout the solver rejects
      }
      break;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  CHECK(tested > 10);
}

}  // TEST_SUITE
