#pragma once

#include <cstdint>
#include <vector>

#include "qclique/dist_matrix.hpp"
#include "qclique/graph.hpp"
#include "qclique/rng.hpp"

namespace qclique::instances {

/// Random digraph with weights in [-W, W] and no negative cycle.
///
/// Arc weights are c + phi(u) - phi(v) with c, phi drawn from [0, W/2], so
/// every cycle weighs the sum of its c values. Each ordered pair carries an arc
/// with probability `density`.
WeightedDigraph random_digraph(std::size_t n, std::int64_t w, double density, Rng& rng);

/// Square matrix with entries uniform in [-m, m], INF with probability `infProb`.
DistMatrix random_matrix(std::size_t n, std::int64_t m, double infProb, Rng& rng);

/// Undirected graph with positive random weights in [1, w] at the given
/// density, plus `planted` triangles on fresh random vertices whose weights sum
/// to -1.
UndirectedWeightedGraph planted_triangles(std::size_t n, std::int64_t w, double density, std::size_t planted,
                                          Rng& rng);

/// Graph on n = q^4 vertices where exactly `pairs` pairs between coarse blocks
/// 0 and 1 are each completed by one vertex of fine block `fineBlock` (which
/// must lie in a third coarse block). Every other pair stays triangle-free.
UndirectedWeightedGraph planted_heavy_triple(std::size_t n, std::size_t pairs, std::uint32_t fineBlock);

/// Graph with one pair {0, 1} completed by `gamma` distinct vertices 2..gamma+1.
UndirectedWeightedGraph planted_heavy_pair(std::size_t n, std::size_t gamma);

}  // namespace qclique::instances
