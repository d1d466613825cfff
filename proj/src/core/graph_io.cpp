#include "qclique/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

namespace qclique {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view field, std::size_t lineNo, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(lineNo, std::string("bad ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

EdgeList parse_graph(std::string_view text) {
  EdgeList g;
  bool haveHeader = false;
  std::size_t declared = 0;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++lineNo;
    auto fields = split_fields(line);
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 3) throw ParseError(lineNo, "expected 3 fields, got " + std::to_string(fields.size()));

    if (!haveHeader) {
      g.vertexCount = parse_number<std::size_t>(fields[0], lineNo, "vertex count");
      declared = parse_number<std::size_t>(fields[1], lineNo, "edge count");
      if (fields[2] == "directed") {
        g.directed = true;
      } else if (fields[2] == "undirected") {
        g.directed = false;
      } else {
        throw ParseError(lineNo, "graph kind must be 'directed' or 'undirected'");
      }
      if (g.vertexCount == 0) throw ParseError(lineNo, "vertex count must be positive");
      haveHeader = true;
      continue;
    }

    EdgeRecord e{parse_number<Vertex>(fields[0], lineNo, "vertex"),
                 parse_number<Vertex>(fields[1], lineNo, "vertex"),
                 parse_number<std::int64_t>(fields[2], lineNo, "weight")};
    if (e.u >= g.vertexCount || e.v >= g.vertexCount) throw ParseError(lineNo, "vertex out of range");
    if (e.u == e.v) throw ParseError(lineNo, "self-loop at vertex " + std::to_string(e.u));
    if (e.w > ExtWeight::kMaxFinite || e.w < -ExtWeight::kMaxFinite) throw ParseError(lineNo, "weight out of range");
    auto key = g.directed ? std::pair{e.u, e.v} : std::pair{std::min(e.u, e.v), std::max(e.u, e.v)};
    if (!seen.insert(key).second) throw ParseError(lineNo, "duplicate edge");
    g.edges.push_back(e);
  }
  if (!haveHeader) throw ParseError(lineNo, "missing header");
  if (g.edges.size() != declared) {
    throw ParseError(lineNo, "header declares " + std::to_string(declared) + " edges, found " +
                                 std::to_string(g.edges.size()));
  }
  return g;
}

EdgeList read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

WeightedDigraph EdgeList::to_digraph() const {
  if (!directed) throw GraphError("edge list is undirected");
  WeightedDigraph g(vertexCount);
  for (const auto& e : edges) g.set_arc(e.u, e.v, e.w);
  return g;
}

UndirectedWeightedGraph EdgeList::to_undirected() const {
  if (directed) throw GraphError("edge list is directed");
  UndirectedWeightedGraph g(vertexCount);
  for (const auto& e : edges) g.set_edge(e.u, e.v, e.w);
  return g;
}

std::string serialize_graph(const EdgeList& g) {
  std::vector<EdgeRecord> edges = g.edges;
  if (!g.directed) {
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
  }
  std::sort(edges.begin(), edges.end(),
            [](const EdgeRecord& a, const EdgeRecord& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  std::ostringstream out;
  out << g.vertexCount << ' ' << edges.size() << ' ' << (g.directed ? "directed" : "undirected") << '\n';
  for (const auto& e : edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
  return out.str();
}

EdgeList edge_list_of(const WeightedDigraph& g) {
  EdgeList out{g.vertex_count(), true, {}};
  for (const auto& [uv, w] : g.arcs()) out.edges.push_back({uv.first, uv.second, w});
  return out;
}

EdgeList edge_list_of(const UndirectedWeightedGraph& g) {
  EdgeList out{g.vertex_count(), false, {}};
  for (const auto& [p, w] : g.edge_list()) out.edges.push_back({p.lo, p.hi, w});
  return out;
}

nlohmann::json matrix_to_json(const DistMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      const ExtWeight w = m.at(i, j);
      if (w.is_inf()) {
        row.push_back("INF");
      } else {
        row.push_back(w.value());
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

DistMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix JSON must be an array of rows");
  std::vector<std::vector<ExtWeight>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    std::vector<ExtWeight> r;
    for (const auto& cell : row) {
      if (cell.is_string()) {
        if (cell.get<std::string>() != "INF") throw std::invalid_argument("only \"INF\" is allowed as a string entry");
        r.push_back(ExtWeight::inf());
      } else if (cell.is_number_integer()) {
        r.push_back(ExtWeight::finite(cell.get<std::int64_t>()));
      } else {
        throw std::invalid_argument("matrix entries must be integers or \"INF\"");
      }
    }
    rows.push_back(std::move(r));
  }
  return DistMatrix::from_rows(rows);
}

}  // namespace qclique
