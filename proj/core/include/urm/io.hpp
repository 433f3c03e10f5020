#pragma once

// Text formats. '#' comment lines and blank lines are ignored on input; every
// writer ends with a trailing newline.
//
//   .graph     "n m", optional "order: v0 v1 ... v(n-1)", then m lines "u v"
//   .ivg       "n", then n lines "id left right"
//   .nest      "n", then n lines "id L l r R"
//   .matching  "size k", then k lines "u v" with u < v, sorted by u

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "urm/graph.hpp"
#include "urm/interval_nest.hpp"
#include "urm/matching.hpp"

namespace urm {

struct GraphFile {
  UndirectedGraph graph;
  std::optional<VertexOrdering> order;
};

GraphFile parse_graph(std::string_view text);
std::string format_graph(const UndirectedGraph& g, const VertexOrdering* order = nullptr);

IntervalRep parse_ivg(std::string_view text);
std::string format_ivg(const IntervalRep& rep);

NestRep parse_nest(std::string_view text);
std::string format_nest(const NestRep& rep);

Matching parse_matching(std::string_view text);
std::string format_matching(const Matching& m);

/// "size k" followed by one id per line, ascending.
std::string format_vertex_set(std::span<const Vertex> set);

/// Whole-file helpers; throw urm::Error on I/O failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace urm
