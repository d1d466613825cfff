#pragma once

#include <cstdint>
#include <vector>

#include "qclique/dist_matrix.hpp"
#include "qclique/graph.hpp"

/// Brute-force reference implementations. Nothing here calls into the
/// simulator; each function is a direct transcription of its definition.
namespace qclique::oracles {

/// Largest vertex count accepted by the triangle enumerators.
inline constexpr std::size_t kMaxTriangleVertices = 256;

/// Exact distances; throws NegativeCycleError on a negative diagonal.
DistMatrix floyd_warshall(const WeightedDigraph& g);

/// Single-source distances; throws NegativeCycleError if a negative cycle is
/// reachable from `source`.
std::vector<ExtWeight> bellman_ford(const WeightedDigraph& g, Vertex source);

/// True iff {u,v,w} are pairwise adjacent and f(u,v)+f(u,w)+f(v,w) < 0.
bool is_negative_triangle(const UndirectedWeightedGraph& g, Vertex u, Vertex v, Vertex w);

/// Number of w forming a negative triangle with {u, v}.
std::size_t gamma_count(const UndirectedWeightedGraph& g, Vertex u, Vertex v);

/// Pairs {u,v} in S with one endpoint in `uBlock`, the other in `vBlock`, and
/// some w in `wBlock` completing a negative triangle.
PairSet delta_set(const UndirectedWeightedGraph& g, const PairSet& s, const std::vector<Vertex>& uBlock,
                  const std::vector<Vertex>& vBlock, const std::vector<Vertex>& wBlock);

/// { {u,v} in S : gamma_count(u,v) > 0 }.
PairSet brute_find_edges(const UndirectedWeightedGraph& g, const PairSet& s);

/// Pr[#successes > threshold] for independent trials with the given
/// probabilities, by the O(m^2) convolution recurrence.
double poisson_binomial_tail(const std::vector<double>& probs, double threshold);

/// Full distribution Pr[#successes = k], k = 0..m.
std::vector<double> poisson_binomial_pmf(const std::vector<double>& probs);

}  // namespace qclique::oracles
