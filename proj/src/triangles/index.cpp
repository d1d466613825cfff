#include <algorithm>
#include <cmath>
#include <limits>

#include "qclique/triangles.hpp"

namespace qclique::triangles {

ExtWeight GatheredWeights::uw(Vertex u, Vertex w) const {
  if (schemes_->coarse_of(u) != t_.u || schemes_->fine_of(w) != t_.w)
    throw ConsistencyError("weight f(u,w) was not gathered by this node");
  return g_->weight(u, w);
}

ExtWeight GatheredWeights::wv(Vertex w, Vertex v) const {
  if (schemes_->coarse_of(v) != t_.v || schemes_->fine_of(w) != t_.w)
    throw ConsistencyError("weight f(w,v) was not gathered by this node");
  return g_->weight(w, v);
}

bool negative_triangle_predicate(Vertex u, Vertex v, ExtWeight fuv, const GatheredWeights& gathered) {
  if (fuv.is_inf()) return false;
  ExtWeight best = ExtWeight::inf();
  for (Vertex w : gathered.block()) {
    if (w == u || w == v) continue;
    const ExtWeight a = gathered.uw(u, w);
    const ExtWeight b = gathered.wv(w, v);
    if (a.is_finite() && b.is_finite()) best = ext_min(best, a + b);
  }
  return best.is_finite() && best.value() < -fuv.value();
}

TriangleIndex TriangleIndex::build(const UndirectedWeightedGraph& g, const PairSet& s, const LabelSchemes& schemes,
                                  const UndirectedWeightedGraph* pairWeights) {
  const std::size_t n = g.vertex_count();
  if (n != schemes.n()) throw std::invalid_argument("graph and label schemes disagree on n");
  if (pairWeights && pairWeights->vertex_count() > n) throw std::invalid_argument("pair weights outside the graph");
  if (schemes.fine_count() > 64) throw std::invalid_argument("at most 64 fine blocks are supported (n <= 4096)");
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

  std::vector<std::int64_t> w(n * n, kNone);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      const ExtWeight x = g.weight(a, b);
      if (a != b && x.is_finite()) {
        w[a * n + b] = x.value();
        adj[a].push_back(b);
      }
    }

  TriangleIndex idx;
  idx.n = n;
  const std::size_t q = schemes.q();
  idx.byBlocks.assign(q * q, {});
  idx.pairs.reserve(s.size());
  for (const VertexPair& p : s) {
    if (p.hi >= n) throw std::invalid_argument("pair outside the graph");
    const auto id = static_cast<std::uint32_t>(idx.pairs.size());
    idx.pairs.push_back(p);
    std::int64_t fuv = w[p.lo * n + p.hi];
    if (pairWeights) {
      const ExtWeight x = p.hi < pairWeights->vertex_count() ? pairWeights->weight(p.lo, p.hi) : ExtWeight::inf();
      fuv = x.is_finite() ? x.value() : kNone;
    }
    std::uint64_t mask = 0;
    std::uint32_t gamma = 0;
    if (fuv != kNone) {
      const std::int64_t* row = &w[static_cast<std::size_t>(p.hi) * n];
      for (Vertex x : adj[p.lo]) {
        if (x == p.hi || row[x] == kNone) continue;
        if (w[p.lo * n + x] + row[x] + fuv < 0) {
          mask |= std::uint64_t{1} << schemes.fine_of(x);
          ++gamma;
        }
      }
    }
    idx.weight.push_back(fuv == kNone ? 0 : fuv);
    idx.mask.push_back(mask);
    idx.gamma.push_back(gamma);
    idx.byBlocks[schemes.coarse_of(p.lo) * q + schemes.coarse_of(p.hi)].push_back(id);
  }
  return idx;
}

std::size_t TriangleIndex::delta_size(std::uint32_t u, std::uint32_t v, std::uint32_t wb) const {
  const std::size_t q = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(byBlocks.size()))));
  std::size_t count = 0;
  for (std::uint32_t id : byBlocks[u * q + v]) count += (mask[id] >> wb) & 1U;
  return count;
}

}  // namespace qclique::triangles
