#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qclique/dist_matrix.hpp"
#include "qclique/graph.hpp"

namespace qclique {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct EdgeRecord {
  Vertex u;
  Vertex v;
  std::int64_t w;
};

/// Parsed edge-list file: header "n m directed|undirected" then m lines "u v w".
/// Blank lines and lines starting with '#' are ignored.
struct EdgeList {
  std::size_t vertexCount = 0;
  bool directed = true;
  std::vector<EdgeRecord> edges;

  WeightedDigraph to_digraph() const;
  UndirectedWeightedGraph to_undirected() const;
};

EdgeList parse_graph(std::string_view text);
EdgeList read_graph_file(const std::string& path);

/// Canonical text: edges sorted, undirected edges written with u < v.
std::string serialize_graph(const EdgeList& g);
EdgeList edge_list_of(const WeightedDigraph& g);
EdgeList edge_list_of(const UndirectedWeightedGraph& g);

/// Matrices as nested JSON arrays, INF written as the string "INF".
nlohmann::json matrix_to_json(const DistMatrix& m);
DistMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace qclique
