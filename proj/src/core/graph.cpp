#include "qclique/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qclique {

WeightedDigraph::WeightedDigraph(std::size_t vertexCount) : n_(vertexCount) {
  if (vertexCount == 0) throw GraphError("a digraph needs at least one vertex");
}

void WeightedDigraph::set_arc(Vertex u, Vertex v, std::int64_t w) {
  if (u >= n_ || v >= n_) {
    throw GraphError("arc " + std::to_string(u) + "->" + std::to_string(v) + " out of range");
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  ExtWeight::finite(w);
  arcs_[{u, v}] = w;
}

std::optional<std::int64_t> WeightedDigraph::arc(Vertex u, Vertex v) const {
  auto it = arcs_.find({u, v});
  if (it == arcs_.end()) return std::nullopt;
  return it->second;
}

std::int64_t WeightedDigraph::max_abs_weight() const {
  std::int64_t best = 0;
  for (const auto& [uv, w] : arcs_) best = std::max(best, std::abs(w));
  return best;
}

void PairSet::insert(Vertex a, Vertex b) {
  if (a >= n_ || b >= n_) {
    throw GraphError("pair {" + std::to_string(a) + "," + std::to_string(b) + "} out of range");
  }
  pairs_.insert(VertexPair::of(a, b));
}

bool PairSet::contains(Vertex a, Vertex b) const {
  if (a == b) return false;
  return pairs_.contains(VertexPair::of(a, b));
}

PairSet PairSet::all_pairs(std::size_t vertexCount) {
  PairSet s(vertexCount);
  for (Vertex u = 0; u < vertexCount; ++u) {
    for (Vertex v = u + 1; v < vertexCount; ++v) s.pairs_.insert({u, v});
  }
  return s;
}

PairSet PairSet::set_union(const PairSet& other) const {
  PairSet out(std::max(n_, other.n_));
  out.pairs_ = pairs_;
  out.pairs_.insert(other.pairs_.begin(), other.pairs_.end());
  return out;
}

PairSet PairSet::set_difference(const PairSet& other) const {
  PairSet out(n_);
  std::set_difference(pairs_.begin(), pairs_.end(), other.pairs_.begin(), other.pairs_.end(),
                      std::inserter(out.pairs_, out.pairs_.end()));
  return out;
}

UndirectedWeightedGraph::UndirectedWeightedGraph(std::size_t vertexCount)
    : n_(vertexCount), w_(vertexCount * vertexCount, ExtWeight::inf()) {
  if (vertexCount == 0) throw GraphError("a graph needs at least one vertex");
}

void UndirectedWeightedGraph::check_pair(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) {
    throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
  }
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
}

void UndirectedWeightedGraph::set_edge(Vertex u, Vertex v, std::int64_t w) {
  check_pair(u, v);
  const ExtWeight fw = ExtWeight::finite(w);
  ExtWeight& slot = w_[static_cast<std::size_t>(u) * n_ + v];
  if (slot.is_inf()) ++edges_;
  slot = fw;
  w_[static_cast<std::size_t>(v) * n_ + u] = fw;
}

void UndirectedWeightedGraph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  ExtWeight& slot = w_[static_cast<std::size_t>(u) * n_ + v];
  if (slot.is_finite()) --edges_;
  slot = ExtWeight::inf();
  w_[static_cast<std::size_t>(v) * n_ + u] = ExtWeight::inf();
}

UndirectedWeightedGraph UndirectedWeightedGraph::padded_to(std::size_t vertexCount) const {
  if (vertexCount < n_) throw GraphError("cannot pad a graph to fewer vertices");
  UndirectedWeightedGraph out(vertexCount);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const ExtWeight w = weight(u, v);
      if (w.is_finite()) out.set_edge(u, v, w.value());
    }
  }
  return out;
}

std::vector<std::pair<VertexPair, std::int64_t>> UndirectedWeightedGraph::edge_list() const {
  std::vector<std::pair<VertexPair, std::int64_t>> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const ExtWeight w = weight(u, v);
      if (w.is_finite()) out.push_back({{u, v}, w.value()});
    }
  }
  return out;
}

}  // namespace qclique
