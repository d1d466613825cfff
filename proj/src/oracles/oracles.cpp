#include "qclique/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qclique::oracles {
namespace {

void guard_size(const UndirectedWeightedGraph& g) {
  if (g.vertex_count() > kMaxTriangleVertices) {
    throw std::length_error("triangle oracle limited to " + std::to_string(kMaxTriangleVertices) +
                            " vertices, got " + std::to_string(g.vertex_count()));
  }
}

}  // namespace

DistMatrix floyd_warshall(const WeightedDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<ExtWeight> d(n * n, ExtWeight::inf());
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = ExtWeight::finite(0);
  for (const auto& [uv, w] : g.arcs()) d[uv.first * n + uv.second] = ExtWeight::finite(w);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtWeight dik = d[i * n + k];
      if (dik.is_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const ExtWeight cand = dik + d[k * n + j];
        if (cand < d[i * n + j]) d[i * n + j] = cand;
      }
    }
  }
  std::int64_t mag = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i * n + i] < ExtWeight::finite(0)) {
      throw NegativeCycleError("negative cycle through vertex " + std::to_string(i));
    }
  }
  for (ExtWeight w : d) {
    if (w.is_finite()) mag = std::max(mag, std::abs(w.value()));
  }
  DistMatrix out(n, mag);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.set(i, j, d[i * n + j]);
  }
  return out;
}

std::vector<ExtWeight> bellman_ford(const WeightedDigraph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) throw std::out_of_range("source out of range");
  std::vector<ExtWeight> dist(n, ExtWeight::inf());
  dist[source] = ExtWeight::finite(0);
  for (std::size_t round = 0; round + 1 < n; ++round) {
    bool changed = false;
    for (const auto& [uv, w] : g.arcs()) {
      const ExtWeight cand = dist[uv.first] + ExtWeight::finite(w);
      if (cand < dist[uv.second]) {
        dist[uv.second] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }
  for (const auto& [uv, w] : g.arcs()) {
    if (dist[uv.first] + ExtWeight::finite(w) < dist[uv.second]) {
      throw NegativeCycleError("negative cycle reachable from " + std::to_string(source));
    }
  }
  return dist;
}

bool is_negative_triangle(const UndirectedWeightedGraph& g, Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) return false;
  const ExtWeight a = g.weight(u, v);
  const ExtWeight b = g.weight(u, w);
  const ExtWeight c = g.weight(v, w);
  if (a.is_inf() || b.is_inf() || c.is_inf()) return false;
  return a.value() + b.value() + c.value() < 0;
}

std::size_t gamma_count(const UndirectedWeightedGraph& g, Vertex u, Vertex v) {
  guard_size(g);
  if (u == v) throw GraphError("gamma_count needs two distinct vertices");
  std::size_t count = 0;
  for (Vertex w = 0; w < g.vertex_count(); ++w) {
    if (is_negative_triangle(g, u, v, w)) ++count;
  }
  return count;
}

PairSet delta_set(const UndirectedWeightedGraph& g, const PairSet& s, const std::vector<Vertex>& uBlock,
                  const std::vector<Vertex>& vBlock, const std::vector<Vertex>& wBlock) {
  guard_size(g);
  PairSet out(g.vertex_count());
  for (Vertex u : uBlock) {
    for (Vertex v : vBlock) {
      if (u == v || !s.contains(u, v)) continue;
      for (Vertex w : wBlock) {
        if (is_negative_triangle(g, u, v, w)) {
          out.insert(u, v);
          break;
        }
      }
    }
  }
  return out;
}

PairSet brute_find_edges(const UndirectedWeightedGraph& g, const PairSet& s) {
  guard_size(g);
  PairSet out(g.vertex_count());
  for (const VertexPair& p : s) {
    if (gamma_count(g, p.lo, p.hi) > 0) out.insert(p);
  }
  return out;
}

std::vector<double> poisson_binomial_pmf(const std::vector<double>& probs) {
  std::vector<double> pmf(probs.size() + 1, 0.0);
  pmf[0] = 1.0;
  for (std::size_t t = 0; t < probs.size(); ++t) {
    const double p = probs[t];
    if (p < 0.0 || p > 1.0 || std::isnan(p)) throw std::domain_error("probability outside [0,1]");
    for (std::size_t k = t + 1; k > 0; --k) pmf[k] = pmf[k] * (1.0 - p) + pmf[k - 1] * p;
    pmf[0] *= 1.0 - p;
  }
  return pmf;
}

double poisson_binomial_tail(const std::vector<double>& probs, double threshold) {
  const std::vector<double> pmf = poisson_binomial_pmf(probs);
  double tail = 0.0;
  for (std::size_t k = pmf.size(); k-- > 0;) {
    if (static_cast<double>(k) <= threshold) break;
    tail += pmf[k];
  }
  return tail;
}

}  // namespace qclique::oracles
