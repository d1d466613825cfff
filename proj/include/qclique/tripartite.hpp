#pragma once

#include "qclique/dist_matrix.hpp"
#include "qclique/graph.hpp"

namespace qclique {

/// Undirected tripartite graph encoding min_k A[i,k] + B[k,j] < D[i,j].
///
/// Vertex i of block I is i, vertex j of block J is n + j, vertex k of block K
/// is 2n + k. The graph may carry extra isolated vertices past 3n when a
/// larger host size is requested.
struct TripartiteInstance {
  std::size_t n = 0;
  UndirectedWeightedGraph graph;
  /// I x J pairs with at least one k such that A[i,k] and B[k,j] are finite.
  PairSet pairs;

  Vertex i_vertex(std::size_t i) const { return static_cast<Vertex>(i); }
  Vertex j_vertex(std::size_t j) const { return static_cast<Vertex>(n + j); }
  Vertex k_vertex(std::size_t k) const { return static_cast<Vertex>(2 * n + k); }
};

/// f(i,k) = A[i,k], f(j,k) = B[k,j], f(i,j) = -D[i,j] on the pairs of S.
/// INF entries of A or B become non-edges. `hostVertexCount` of 0 means 3n.
TripartiteInstance build_tripartite_instance(const DistMatrix& a, const DistMatrix& b,
                                             const DistMatrix& d,
                                             std::size_t hostVertexCount = 0);

/// Rewrites only the I-J weights for a new D, keeping everything else.
void retarget_tripartite_instance(TripartiteInstance& inst, const DistMatrix& d);

}  // namespace qclique
