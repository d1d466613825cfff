#include "qclique/instances.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qclique::instances {

WeightedDigraph random_digraph(std::size_t n, std::int64_t w, double density, Rng& rng) {
  if (w < 0) throw std::invalid_argument("W must be non-negative");
  WeightedDigraph g(n);
  const std::int64_t half = w / 2;
  std::vector<std::int64_t> phi(n);
  for (auto& p : phi) p = rng.between(0, half);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || !rng.bernoulli(density)) continue;
      g.set_arc(u, v, rng.between(0, half) + phi[u] - phi[v]);
    }
  }
  return g;
}

DistMatrix random_matrix(std::size_t n, std::int64_t m, double infProb, Rng& rng) {
  DistMatrix out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.bernoulli(infProb)) continue;
      out.set(i, j, ExtWeight::finite(rng.between(-m, m)));
    }
  }
  return out;
}

UndirectedWeightedGraph planted_triangles(std::size_t n, std::int64_t w, double density, std::size_t planted,
                                          Rng& rng) {
  if (n < 3) throw std::invalid_argument("need at least 3 vertices");
  if (w < 1) throw std::invalid_argument("W must be positive");
  UndirectedWeightedGraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.bernoulli(density)) g.set_edge(u, v, rng.between(1, w));
    }
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t t = 0; t < planted; ++t) {
    for (std::size_t i = 0; i < 3; ++i) std::swap(order[i], order[i + rng.below(n - i)]);
    const Vertex a = order[0], b = order[1], c = order[2];
    const std::int64_t x = rng.between(1, w);
    const std::int64_t y = rng.between(1, w);
    g.set_edge(a, b, x);
    g.set_edge(b, c, y);
    g.set_edge(a, c, -(x + y + 1));
  }
  return g;
}

UndirectedWeightedGraph planted_heavy_triple(std::size_t n, std::size_t pairs, std::uint32_t fineBlock) {
  std::size_t q = 1;
  while (q * q * q * q < n) ++q;
  if (q * q * q * q != n || q < 3) throw std::invalid_argument("n must be a fourth power >= 81");
  const std::size_t coarse = q * q * q;
  const std::size_t fine = q * q;
  const Vertex w0 = static_cast<Vertex>(fineBlock * fine);
  if (w0 / coarse < 2 || fineBlock >= fine) throw std::invalid_argument("fine block must lie outside coarse blocks 0 and 1");
  if (pairs > coarse * coarse) throw std::invalid_argument("too many pairs for two coarse blocks");

  // Pairs are taken row by row: u walks block 0, v walks block 1.
  UndirectedWeightedGraph g(n);
  std::size_t placed = 0;
  for (std::size_t i = 0; i < coarse && placed < pairs; ++i) {
    const Vertex u = static_cast<Vertex>(i);
    g.set_edge(u, w0, 0);
    for (std::size_t j = 0; j < coarse && placed < pairs; ++j, ++placed) {
      const Vertex v = static_cast<Vertex>(coarse + j);
      g.set_edge(u, v, -1);
      g.set_edge(w0, v, 0);
    }
  }
  return g;
}

UndirectedWeightedGraph planted_heavy_pair(std::size_t n, std::size_t gamma) {
  if (gamma + 2 > n) throw std::invalid_argument("gamma too large for n");
  UndirectedWeightedGraph g(n);
  g.set_edge(0, 1, -1);
  for (std::size_t k = 0; k < gamma; ++k) {
    const Vertex w = static_cast<Vertex>(2 + k);
    g.set_edge(0, w, 0);
    g.set_edge(1, w, 0);
  }
  return g;
}

}  // namespace qclique::instances
