#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "urm/errors.hpp"
#include "urm/instances.hpp"
#include "urm/io.hpp"

using namespace urm;

namespace {

std::size_t parse_error_line(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("ivg parse and format") {
  auto rep = parse_ivg("# three intervals\n3\n2 5 9\n0 0 4\n1 3 3\n");
  REQUIRE(rep.size() == 3);
  CHECK(rep[0].left == 0);
  CHECK(rep[0].right == 4);
  CHECK(rep[1].left == 3);
  CHECK(rep[2].right == 9);
  CHECK(format_ivg(rep) == "3\n0 0 4\n1 3 3\n2 5 9\n");
  CHECK(parse_ivg("0\n").empty());
}

TEST_CASE("ivg errors") {
  CHECK(parse_error_line([] { parse_ivg("2\n0 1 2\n"); }) == 3);
  CHECK(parse_error_line([] { parse_ivg("2\n0 1 2\n0 3 4\n"); }) == 3);
  CHECK(parse_error_line([] { parse_ivg("1\n0 5 4\n"); }) == 2);
  CHECK(parse_error_line([] { parse_ivg("1\n1 0 4\n"); }) == 2);
  CHECK(parse_error_line([] { parse_ivg("1\n0 x 4\n"); }) == 2);
  CHECK(parse_error_line([] { parse_ivg("1\n0 0 4\n\n0 1 1\n"); }) == 4);
  CHECK(parse_error_line([] { parse_ivg(""); }) == 1);
}

TEST_CASE("nest parse and format") {
  auto rep = parse_nest("2\n1 0 2 3 9\n0 1 1 1 1\n");
  REQUIRE(rep.size() == 2);
  CHECK(rep[0] == Nest{1, 1, 1, 1});
  CHECK(rep[1] == Nest{0, 2, 3, 9});
  CHECK(format_nest(rep) == "2\n0 1 1 1 1\n1 0 2 3 9\n");
  CHECK(parse_error_line([] { parse_nest("1\n0 0 3 2 9\n"); }) == 2);
  CHECK(parse_error_line([] { parse_nest("1\n0 0 1 2\n"); }) == 2);
}

TEST_CASE("matching parse and format") {
  auto m = parse_matching("size 2\n5 4\n0 1\n");
  REQUIRE(m.size() == 2);
  CHECK(format_matching(m) == "size 2\n0 1\n4 5\n");
  CHECK(parse_matching("size 0\n").empty());
  CHECK(format_matching(Matching{}) == "size 0\n");
  CHECK(parse_error_line([] { parse_matching("size 1\n2 2\n"); }) == 2);
  CHECK(parse_error_line([] { parse_matching("count 1\n0 1\n"); }) == 1);
  CHECK(parse_error_line([] { parse_matching("size 2\n0 1\n"); }) == 3);
  CHECK(parse_error_line([] { parse_matching("size 1\n0 1\n2 3\n"); }) == 3);
}

TEST_CASE("vertex set format") {
  std::vector<Vertex> set{7, 2, 5};
  CHECK(format_vertex_set(set) == "size 3\n2\n5\n7\n");
  CHECK(format_vertex_set({}) == "size 0\n");
}

TEST_CASE("CRLF and comments are tolerated") {
  auto g = parse_graph("# header\r\n3 1\r\n  # indented comment\r\n0 2\r\n").graph;
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 2));
}

TEST_CASE("property: round trips") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const Vertex n = static_cast<Vertex>(rng() % 20);
    auto rep = testing::random_intervals(rng, n, 50, 10);
    CHECK(parse_ivg(format_ivg(rep)) == rep);
    auto nest = testing::random_nest(rng, n, 30);
    CHECK(parse_nest(format_nest(nest)) == nest);
    auto g = intersection_graph(rep);
    auto ord = testing::random_ordering(rng, n);
    auto gf = parse_graph(format_graph(g, &ord));
    CHECK(gf.graph == g);
    REQUIRE(gf.order);
    CHECK(*gf.order == ord);
    auto all = testing::all_matchings(n <= 8 ? g : UndirectedGraph(0));
    const auto& m = all[rng() % all.size()];
    CHECK(parse_matching(format_matching(m)) == m);
  }
}

TEST_CASE("file helpers") {
  auto path = std::filesystem::temp_directory_path() / "urm_io_roundtrip.ivg";
  write_file(path.string(), "1\n0 0 0\n");
  CHECK(read_file(path.string()) == "1\n0 0 0\n");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_file(path.string()), Error);
}

}  // TEST_SUITE
