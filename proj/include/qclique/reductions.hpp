#pragma once

#include <cstdint>
#include <functional>

#include "qclique/constants.hpp"
#include "qclique/dist_matrix.hpp"
#include "qclique/graph.hpp"
#include "qclique/rng.hpp"
#include "qclique/tripartite.hpp"

namespace qclique::reductions {

/// One FindEdgesWithPromise call: completing edges come from `sides`, f(u, v)
/// of the queried pairs from `pairs`.
struct PromiseCall {
  const UndirectedWeightedGraph& sides;
  const UndirectedWeightedGraph& pairs;
  const PairSet& s;
};

struct PromiseOutcome {
  PairSet pairs;
  bool aborted = false;
};

using PromiseSolver = std::function<PromiseOutcome(const PromiseCall&, Rng&)>;

struct FindEdgesResult {
  PairSet pairs;
  PairSet beforeFinal;  // M when the loop exits
  std::size_t loopIterations = 0;
  std::size_t calls = 0;
  std::size_t aborts = 0;
};

/// Pairs of s0 with Gamma > 0, through promise calls on sampled subgraphs.
/// The loop threshold and sampling rate use constants.findEdgesLoop.
FindEdgesResult find_edges(const UndirectedWeightedGraph& g, const PairSet& s0, const PromiseSolver& solver, Rng& rng,
                           const PaperConstants& constants = {});

/// FindEdges on a tripartite instance (S = its I x J pairs).
using FindEdgesFn = std::function<FindEdgesResult(const UndirectedWeightedGraph&, const PairSet&)>;

struct ProductResult {
  DistMatrix product;
  std::size_t calls = 0;
  std::size_t callBound = 0;  // ceil(log2(4M + 2))
  std::size_t aborts = 0;     // inner promise calls that aborted
};

/// min-plus product A * B by binary search over [-2M, 2M] with one FindEdges
/// call per halving, M the larger recorded magnitude bound of A and B.
/// `hostVertexCount` of 0 means 3n.
ProductResult distance_product_via_triangles(const DistMatrix& a, const DistMatrix& b, const FindEdgesFn& findEdges,
                                             std::size_t hostVertexCount = 0);

using ProductFn = std::function<DistMatrix(const DistMatrix&, const DistMatrix&)>;

/// ceil(log2 n) squarings of A_G; magnitudes are bounded by n W. Throws
/// NegativeCycleError when a diagonal entry ends up negative.
DistMatrix apsp(const WeightedDigraph& g, const ProductFn& product);

/// Number of squarings apsp performs for n vertices.
std::size_t squaring_count(std::size_t n);

}  // namespace qclique::reductions
