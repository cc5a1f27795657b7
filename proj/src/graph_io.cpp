#include "xclique/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace xclique {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t parse_number(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

GraphFile parse_graph_file(std::string_view text) {
  std::optional<std::uint64_t> n, m;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::vector<std::uint32_t> sizes;
  std::vector<bool> has_size;
  bool any_size = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;
    const std::string_view tag = fields[0];
    if (tag == "p") {
      if (n) throw ParseError(line_no, "duplicate problem line");
      if (fields.size() != 3) throw ParseError(line_no, "problem line must be 'p <n> <m>'");
      n = parse_number(fields[1], line_no);
      m = parse_number(fields[2], line_no);
      if (*n > std::numeric_limits<Vertex>::max() / 2) throw ParseError(line_no, "too many vertices");
      sizes.assign(*n, 0);
      has_size.assign(*n, false);
      continue;
    }
    if (!n) throw ParseError(line_no, "'" + std::string(tag) + "' line before problem line");
    if (tag == "e") {
      if (fields.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
      std::uint64_t u = parse_number(fields[1], line_no);
      std::uint64_t v = parse_number(fields[2], line_no);
      if (u < 1 || u > *n || v < 1 || v > *n) throw ParseError(line_no, "edge endpoint out of range");
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      auto a = static_cast<Vertex>(std::min(u, v) - 1);
      auto b = static_cast<Vertex>(std::max(u, v) - 1);
      if (!seen.insert({a, b}).second) {
        throw ParseError(line_no, "duplicate edge " + std::to_string(a + 1) + " " + std::to_string(b + 1));
      }
      edges.push_back({a, b});
    } else if (tag == "f") {
      if (fields.size() != 3) throw ParseError(line_no, "size line must be 'f <v> <k>'");
      std::uint64_t v = parse_number(fields[1], line_no);
      std::uint64_t k = parse_number(fields[2], line_no);
      if (v < 1 || v > *n) throw ParseError(line_no, "f line vertex out of range");
      if (has_size[v - 1]) throw ParseError(line_no, "duplicate f line for vertex " + std::to_string(v));
      if (k > std::numeric_limits<std::uint32_t>::max()) throw ParseError(line_no, "clique size too large");
      has_size[v - 1] = true;
      sizes[v - 1] = static_cast<std::uint32_t>(k);
      any_size = true;
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
    }
  }
  if (!n) throw ParseError(line_no, "missing problem line");
  if (edges.size() != *m) {
    throw ParseError(line_no, "header declares " + std::to_string(*m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  GraphFile file{Graph(*n, edges), std::nullopt};
  if (any_size) {
    for (std::size_t v = 0; v < *n; ++v) {
      if (!has_size[v]) throw ParseError(line_no, "missing f line for vertex " + std::to_string(v + 1));
    }
    file.clique_sizes = std::move(sizes);
  }
  return file;
}

Graph read_graph(std::string_view text) { return parse_graph_file(text).graph; }

GraphFile load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

std::string write_graph(const Graph& g, const std::vector<std::uint32_t>* clique_sizes) {
  std::string out = "p " + std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  }
  if (clique_sizes) {
    for (std::size_t v = 0; v < clique_sizes->size(); ++v) {
      out += "f " + std::to_string(v + 1) + " " + std::to_string((*clique_sizes)[v]) + "\n";
    }
  }
  return out;
}

std::string write_dot(const Graph& g, const std::vector<std::vector<Vertex>>& clusters) {
  std::ostringstream out;
  out << "graph H {\n";
  if (clusters.empty()) {
    for (Vertex v = 0; v < g.order(); ++v) out << "  " << v + 1 << ";\n";
  } else {
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      out << "  subgraph cluster_" << i + 1 << " {\n    label=\"V" << i + 1 << "\";\n";
      for (Vertex v : clusters[i]) out << "    " << v + 1 << ";\n";
      out << "  }\n";
    }
  }
  for (const Edge& e : g.edges()) out << "  " << e.u + 1 << " -- " << e.v + 1 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace xclique
