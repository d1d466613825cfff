#include "qclique/reductions.hpp"

#include <algorithm>
#include <cmath>

namespace qclique::reductions {

FindEdgesResult find_edges(const UndirectedWeightedGraph& g, const PairSet& s0, const PromiseSolver& solver, Rng& rng,
                           const PaperConstants& constants) {
  const std::size_t n = g.vertex_count();
  const double nd = static_cast<double>(n);
  const double base = n >= 2 ? constants.findEdgesLoop * std::log(nd) : 0.0;

  FindEdgesResult res;
  PairSet s = s0;
  PairSet m(n);
  for (std::size_t i = 0; base > 0 && std::ldexp(base, static_cast<int>(i)) <= nd; ++i) {
    const double p = std::min(1.0, std::sqrt(std::ldexp(base, static_cast<int>(i)) / nd));
    Rng sampler = rng.substream("find-edges-sample", {i});
    UndirectedWeightedGraph sampled(n);
    for (const auto& [pair, w] : g.edge_list())
      if (sampler.bernoulli(p)) sampled.set_edge(pair.lo, pair.hi, w);
    Rng callRng = rng.substream("find-edges-call", {i});
    const PromiseOutcome out = solver(PromiseCall{sampled, g, s}, callRng);
    ++res.calls;
    res.aborts += out.aborted ? 1 : 0;
    s = s.set_difference(out.pairs);
    m = m.set_union(out.pairs);
    ++res.loopIterations;
  }
  res.beforeFinal = m;
  Rng finalRng = rng.substream("find-edges-final");
  const PromiseOutcome last = solver(PromiseCall{g, g, s}, finalRng);
  ++res.calls;
  res.aborts += last.aborted ? 1 : 0;
  res.pairs = m.set_union(last.pairs);
  return res;
}

ProductResult distance_product_via_triangles(const DistMatrix& a, const DistMatrix& b, const FindEdgesFn& findEdges,
                                             std::size_t hostVertexCount) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("A and B must have the same dimension");
  const std::int64_t bound = std::max(a.max_mag(), b.max_mag());

  ProductResult res{DistMatrix(n, 2 * bound)};
  res.callBound = static_cast<std::size_t>(std::ceil(std::log2(4.0 * static_cast<double>(bound) + 2.0)));

  // Half-open intervals [lo, hi) holding min_k A[i,k] + B[k,j].
  std::vector<std::int64_t> lo(n * n, -2 * bound), hi(n * n, 2 * bound + 1);
  DistMatrix d(n, 2 * bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.set(i, j, ExtWeight::finite(0));
  TripartiteInstance inst = build_tripartite_instance(a, b, d, hostVertexCount);

  auto open = [&] {
    for (const VertexPair& p : inst.pairs) {
      const std::size_t c = p.lo * n + (p.hi - n);
      if (hi[c] - lo[c] > 1) return true;
    }
    return false;
  };
  while (open()) {
    for (const VertexPair& p : inst.pairs) {
      const std::size_t i = p.lo, j = p.hi - n, c = i * n + j;
      d.set(i, j, ExtWeight::finite(lo[c] + (hi[c] - lo[c]) / 2));
    }
    retarget_tripartite_instance(inst, d);
    const FindEdgesResult found = findEdges(inst.graph, inst.pairs);
    ++res.calls;
    res.aborts += found.aborts;
    for (const VertexPair& p : inst.pairs) {
      const std::size_t i = p.lo, j = p.hi - n, c = i * n + j;
      if (hi[c] - lo[c] <= 1) continue;
      const std::int64_t mid = d.at(i, j).value();
      (found.pairs.contains(p) ? hi[c] : lo[c]) = mid;
    }
  }
  for (const VertexPair& p : inst.pairs) {
    const std::size_t i = p.lo, j = p.hi - n;
    res.product.set(i, j, ExtWeight::finite(lo[i * n + j]));
  }
  return res;
}

std::size_t squaring_count(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

DistMatrix apsp(const WeightedDigraph& g, const ProductFn& product) {
  const std::size_t n = g.vertex_count();
  const std::int64_t cap = static_cast<std::int64_t>(n) * g.max_abs_weight();
  DistMatrix cur = encode_graph_matrix(g);
  cur.set_max_mag(cap);
  for (std::size_t step = 0; step < squaring_count(n); ++step) {
    const DistMatrix next = product(cur, cur);
    DistMatrix capped(n, cap);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const ExtWeight w = next.at(i, j);
        capped.set(i, j, w.is_inf() ? w : ExtWeight::finite(std::clamp(w.value(), -cap, cap)));
      }
    cur = capped;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (cur.at(i, i).value() < 0) throw NegativeCycleError("negative cycle through vertex " + std::to_string(i));
  return cur;
}

}  // namespace qclique::reductions
