#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xclique/graph.hpp"

namespace xclique {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A graph file: "p <n> <m>", m lines "e <u> <v>" (1-based), comment lines
// starting with "c", and optional "f <v> <k>" lines giving clique sizes.
struct GraphFile {
  Graph graph;
  // Present iff the file had at least one f line; then every vertex has one.
  std::optional<std::vector<std::uint32_t>> clique_sizes;
};

GraphFile parse_graph_file(std::string_view text);
Graph read_graph(std::string_view text);
GraphFile load_graph_file(const std::string& path);

// Canonical form: header, edges ascending with u < v, then f lines if given.
std::string write_graph(const Graph& g, const std::vector<std::uint32_t>* clique_sizes = nullptr);

// Undirected DOT with 1-based labels. When `clusters` is non-empty, each
// listed part becomes its own subgraph cluster.
std::string write_dot(const Graph& g, const std::vector<std::vector<Vertex>>& clusters = {});

}  // namespace xclique
