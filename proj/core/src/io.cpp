#include "urm/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "urm/errors.hpp"

namespace urm {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

/// Significant lines: comments ('#' first non-blank) and blank lines dropped.
std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    out.push_back({number, line.substr(first)});
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> tok;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tok.push_back(s.substr(i, j - i));
    i = j;
  }
  return tok;
}

template <typename Int>
Int to_int(const Line& line, std::string_view tok) {
  Int value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

template <typename Int>
std::vector<Int> ints(const Line& line, std::size_t expected, std::string_view what) {
  auto tok = split_ws(line.text);
  if (tok.size() != expected) {
    throw ParseError(line.number, "expected " + std::string(what));
  }
  std::vector<Int> out;
  out.reserve(tok.size());
  for (auto t : tok) out.push_back(to_int<Int>(line, t));
  return out;
}

Vertex checked_id(const Line& line, long long id, Vertex n) {
  if (id < 0 || id >= n) {
    throw ParseError(line.number, "vertex id " + std::to_string(id) + " out of range [0, " +
                                      std::to_string(n) + ")");
  }
  return static_cast<Vertex>(id);
}

Vertex checked_count(const Line& line, long long n) {
  if (n < 0 || n > 100'000'000) throw ParseError(line.number, "bad vertex count");
  return static_cast<Vertex>(n);
}

void require_line(const std::vector<Line>& lines, std::size_t i, std::string_view what) {
  if (i >= lines.size()) {
    std::size_t last = lines.empty() ? 1 : lines.back().number + 1;
    throw ParseError(last, "unexpected end of input, expected " + std::string(what));
  }
}

void require_end(const std::vector<Line>& lines, std::size_t i) {
  if (i < lines.size()) throw ParseError(lines[i].number, "unexpected trailing line");
}

/// Reads "n" then n lines "id c1 .. ck"; every id in [0, n) exactly once.
template <typename Row, typename Fill>
std::vector<Row> parse_per_vertex(std::string_view text, std::size_t coords, std::string_view shape,
                                  Fill fill) {
  auto lines = significant_lines(text);
  require_line(lines, 0, "header 'n'");
  const Vertex n = checked_count(lines[0], ints<long long>(lines[0], 1, "header 'n'")[0]);
  std::vector<Row> rows(static_cast<std::size_t>(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex k = 0; k < n; ++k) {
    require_line(lines, static_cast<std::size_t>(k) + 1, shape);
    const Line& line = lines[static_cast<std::size_t>(k) + 1];
    auto v = ints<Coord>(line, coords + 1, shape);
    Vertex id = checked_id(line, v[0], n);
    if (seen[id]) throw ParseError(line.number, "duplicate vertex id " + std::to_string(id));
    seen[id] = 1;
    fill(line, rows[id], v);
  }
  require_end(lines, static_cast<std::size_t>(n) + 1);
  return rows;
}

}  // namespace

GraphFile parse_graph(std::string_view text) {
  auto lines = significant_lines(text);
  require_line(lines, 0, "header 'n m'");
  auto header = ints<long long>(lines[0], 2, "header 'n m'");
  const Vertex n = checked_count(lines[0], header[0]);
  if (header[1] < 0) throw ParseError(lines[0].number, "negative edge count");
  const auto m = static_cast<std::size_t>(header[1]);

  GraphFile out;
  std::size_t i = 1;
  if (i < lines.size() && lines[i].text.starts_with("order:")) {
    const Line& line = lines[i];
    auto tok = split_ws(line.text.substr(6));
    if (tok.size() != static_cast<std::size_t>(n)) {
      throw ParseError(line.number, "order line must list all " + std::to_string(n) + " vertices");
    }
    std::vector<Vertex> order;
    order.reserve(tok.size());
    for (auto t : tok) order.push_back(checked_id(line, to_int<long long>(line, t), n));
    try {
      out.order = VertexOrdering(std::move(order));
    } catch (const InvalidInput&) {
      throw ParseError(line.number, "order line is not a permutation");
    }
    ++i;
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k, ++i) {
    require_line(lines, i, "edge line 'u v'");
    const Line& line = lines[i];
    auto uv = ints<long long>(line, 2, "edge line 'u v'");
    Vertex u = checked_id(line, uv[0], n);
    Vertex v = checked_id(line, uv[1], n);
    if (u == v) throw ParseError(line.number, "loop edge at vertex " + std::to_string(u));
    edges.push_back(Edge::of(u, v));
  }
  require_end(lines, i);
  out.graph = UndirectedGraph(n, edges);
  return out;
}

std::string format_graph(const UndirectedGraph& g, const VertexOrdering* order) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  if (order != nullptr) {
    os << "order:";
    for (Vertex v : order->order()) os << ' ' << v;
    os << '\n';
  }
  for (const Edge& e : g.edges()) os << e.a << ' ' << e.b << '\n';
  return os.str();
}

IntervalRep parse_ivg(std::string_view text) {
  return parse_per_vertex<Interval>(text, 2, "line 'id left right'",
                                    [](const Line& line, Interval& iv, const std::vector<Coord>& v) {
                                      if (v[1] > v[2]) {
                                        throw ParseError(line.number, "left endpoint exceeds right");
                                      }
                                      iv = {v[1], v[2]};
                                    });
}

std::string format_ivg(const IntervalRep& rep) {
  std::ostringstream os;
  os << rep.size() << '\n';
  for (std::size_t u = 0; u < rep.size(); ++u) {
    os << u << ' ' << rep[u].left << ' ' << rep[u].right << '\n';
  }
  return os.str();
}

NestRep parse_nest(std::string_view text) {
  return parse_per_vertex<Nest>(text, 4, "line 'id L l r R'",
                                [](const Line& line, Nest& nest, const std::vector<Coord>& v) {
                                  if (!(v[1] <= v[2] && v[2] <= v[3] && v[3] <= v[4])) {
                                    throw ParseError(line.number, "need L <= l <= r <= R");
                                  }
                                  nest = {v[1], v[2], v[3], v[4]};
                                });
}

std::string format_nest(const NestRep& rep) {
  std::ostringstream os;
  os << rep.size() << '\n';
  for (std::size_t u = 0; u < rep.size(); ++u) {
    const Nest& s = rep[u];
    os << u << ' ' << s.L << ' ' << s.l << ' ' << s.r << ' ' << s.R << '\n';
  }
  return os.str();
}

Matching parse_matching(std::string_view text) {
  auto lines = significant_lines(text);
  require_line(lines, 0, "header 'size k'");
  auto tok = split_ws(lines[0].text);
  if (tok.size() != 2 || tok[0] != "size") throw ParseError(lines[0].number, "expected 'size k'");
  const auto k = to_int<long long>(lines[0], tok[1]);
  if (k < 0) throw ParseError(lines[0].number, "negative size");
  Matching m;
  for (long long j = 0; j < k; ++j) {
    require_line(lines, static_cast<std::size_t>(j) + 1, "edge line 'u v'");
    const Line& line = lines[static_cast<std::size_t>(j) + 1];
    auto uv = ints<long long>(line, 2, "edge line 'u v'");
    if (uv[0] < 0 || uv[1] < 0) throw ParseError(line.number, "negative vertex id");
    if (uv[0] == uv[1]) throw ParseError(line.number, "loop edge");
    m.edges.push_back(Edge::of(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1])));
  }
  require_end(lines, static_cast<std::size_t>(k) + 1);
  return m;
}

std::string format_matching(const Matching& m) {
  std::ostringstream os;
  os << "size " << m.size() << '\n';
  for (const Edge& e : m.canonical().edges) os << e.a << ' ' << e.b << '\n';
  return os.str();
}

std::string format_vertex_set(std::span<const Vertex> set) {
  std::vector<Vertex> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  std::ostringstream os;
  os << "size " << sorted.size() << '\n';
  for (Vertex v : sorted) os << v << '\n';
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("write failed for " + path);
}

}  // namespace urm
