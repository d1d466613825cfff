#include "qclique/tripartite.hpp"

namespace qclique {
namespace {

void check_d(const DistMatrix& d, std::size_t n) {
  if (d.size() != n) throw DimensionError("D must match the dimension of A and B");
}

}  // namespace

TripartiteInstance build_tripartite_instance(const DistMatrix& a, const DistMatrix& b,
                                             const DistMatrix& d, std::size_t hostVertexCount) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("A and B must have the same dimension");
  check_d(d, n);
  const std::size_t host = hostVertexCount == 0 ? 3 * n : hostVertexCount;
  if (host < 3 * n) throw DimensionError("host graph smaller than 3n");

  TripartiteInstance inst{n, UndirectedWeightedGraph(host), PairSet(host)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a.at(i, k).is_finite()) inst.graph.set_edge(inst.i_vertex(i), inst.k_vertex(k), a.at(i, k).value());
      if (b.at(k, i).is_finite()) inst.graph.set_edge(inst.j_vertex(i), inst.k_vertex(k), b.at(k, i).value());
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool reachable = false;
      for (std::size_t k = 0; k < n && !reachable; ++k) {
        reachable = a.at(i, k).is_finite() && b.at(k, j).is_finite();
      }
      if (reachable) inst.pairs.insert(inst.i_vertex(i), inst.j_vertex(j));
    }
  }
  retarget_tripartite_instance(inst, d);
  return inst;
}

void retarget_tripartite_instance(TripartiteInstance& inst, const DistMatrix& d) {
  check_d(d, inst.n);
  for (const VertexPair& p : inst.pairs) {
    const std::size_t i = p.lo;
    const std::size_t j = p.hi - inst.n;
    const ExtWeight dij = d.at(i, j);
    if (dij.is_inf()) throw std::invalid_argument("D must be finite on the searched pairs");
    inst.graph.set_edge(p.lo, p.hi, (-dij).value());
  }
}

}  // namespace qclique
