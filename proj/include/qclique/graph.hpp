#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qclique/ext_weight.hpp"

namespace qclique {

using Vertex = std::uint32_t;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NegativeCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Directed graph with integer arc weights and no self-loops.
class WeightedDigraph {
 public:
  explicit WeightedDigraph(std::size_t vertexCount);

  std::size_t vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }

  /// Inserts or overwrites arc u->v. Throws GraphError on self-loops or
  /// out-of-range endpoints.
  void set_arc(Vertex u, Vertex v, std::int64_t w);
  std::optional<std::int64_t> arc(Vertex u, Vertex v) const;
  const std::map<std::pair<Vertex, Vertex>, std::int64_t>& arcs() const { return arcs_; }

  /// Largest |w| over all arcs (0 for an arcless graph).
  std::int64_t max_abs_weight() const;

  friend bool operator==(const WeightedDigraph&, const WeightedDigraph&) = default;

 private:
  std::size_t n_;
  std::map<std::pair<Vertex, Vertex>, std::int64_t> arcs_;
};

/// Undirected pair {u, v} stored with u < v.
struct VertexPair {
  Vertex lo;
  Vertex hi;

  static VertexPair of(Vertex a, Vertex b) {
    if (a == b) throw GraphError("a vertex pair needs two distinct vertices");
    return a < b ? VertexPair{a, b} : VertexPair{b, a};
  }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Set of unordered vertex pairs over a fixed vertex range.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::size_t vertexCount) : n_(vertexCount) {}

  std::size_t vertex_count() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  void insert(Vertex a, Vertex b);
  void insert(VertexPair p) { insert(p.lo, p.hi); }
  void erase(VertexPair p) { pairs_.erase(p); }
  bool contains(Vertex a, Vertex b) const;
  bool contains(VertexPair p) const { return pairs_.contains(p); }

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// All pairs of the complete vertex set.
  static PairSet all_pairs(std::size_t vertexCount);

  PairSet set_union(const PairSet& other) const;
  PairSet set_difference(const PairSet& other) const;

  friend bool operator==(const PairSet& a, const PairSet& b) { return a.pairs_ == b.pairs_; }

 private:
  std::size_t n_ = 0;
  std::set<VertexPair> pairs_;
};

/// Undirected weighted graph G = (V, E, f), dense symmetric storage.
class UndirectedWeightedGraph {
 public:
  explicit UndirectedWeightedGraph(std::size_t vertexCount);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  void set_edge(Vertex u, Vertex v, std::int64_t w);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return weight(u, v).is_finite(); }
  /// f(u, v), or INF when {u, v} is not an edge. Symmetric.
  ExtWeight weight(Vertex u, Vertex v) const {
    return w_[static_cast<std::size_t>(u) * n_ + v];
  }

  /// Same graph with isolated vertices appended up to `vertexCount`.
  UndirectedWeightedGraph padded_to(std::size_t vertexCount) const;

  std::vector<std::pair<VertexPair, std::int64_t>> edge_list() const;

  friend bool operator==(const UndirectedWeightedGraph&, const UndirectedWeightedGraph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::size_t n_;
  std::size_t edges_ = 0;
  std::vector<ExtWeight> w_;
};

}  // namespace qclique
