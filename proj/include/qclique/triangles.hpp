#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qclique/constants.hpp"
#include "qclique/graph.hpp"
#include "qclique/labels.hpp"
#include "qclique/network.hpp"
#include "qclique/qsearch.hpp"
#include "qclique/rng.hpp"

namespace qclique::triangles {

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// What node (U, V, W) holds after the gathering step: f(u, w) for u in U and
/// f(w, v) for v in V, w in W. Lookups outside those blocks are errors.
class GatheredWeights {
 public:
  GatheredWeights(const UndirectedWeightedGraph& g, const LabelSchemes& schemes, BlockTriple t)
      : g_(&g), schemes_(&schemes), t_(t) {}

  BlockTriple triple() const { return t_; }
  std::vector<Vertex> block() const { return schemes_->fine_members(t_.w); }
  ExtWeight uw(Vertex u, Vertex w) const;
  ExtWeight wv(Vertex w, Vertex v) const;

 private:
  const UndirectedWeightedGraph* g_;
  const LabelSchemes* schemes_;
  BlockTriple t_;
};

/// min over w in the W block of f(u,w) + f(w,v) < -f(u,v).
bool negative_triangle_predicate(Vertex u, Vertex v, ExtWeight fuv, const GatheredWeights& gathered);

/// Pairs of S in canonical orientation (coarse block of lo <= coarse block of
/// hi) with, per pair, the bit mask of fine blocks holding a completing vertex.
struct TriangleIndex {
  std::size_t n = 0;
  std::vector<VertexPair> pairs;
  std::vector<std::int64_t> weight;  // f(u, v); pairs that are not edges have mask 0
  std::vector<std::uint64_t> mask;   // bit W: some w in W closes a negative triangle
  std::vector<std::uint32_t> gamma;  // Gamma(u, v)
  /// Pair indices per coarse block pair (U, V), U <= V, index U * q + V.
  std::vector<std::vector<std::uint32_t>> byBlocks;

  /// f(u, v) of the S pairs comes from `pairWeights` when given, else from g;
  /// the completing edges always come from g.
  static TriangleIndex build(const UndirectedWeightedGraph& g, const PairSet& s, const LabelSchemes& schemes,
                             const UndirectedWeightedGraph* pairWeights = nullptr);
  std::size_t delta_size(std::uint32_t u, std::uint32_t v, std::uint32_t w) const;
};

/// Lambda_x(U, V) for every helper node (U, V, x); only the S pairs are kept.
struct LambdaCover {
  double probability = 0.0;
  double balanceBound = 0.0;
  bool wellBalanced = true;
  bool complete = true;  // union over x covers all of P(U, V)
  std::size_t maxPerVertex = 0;
  /// Sampling probability clamped to 1: every Lambda_x(U, V) is all of P(U, V).
  bool full = false;
  /// Retained S pairs (indices into TriangleIndex::pairs) per helper node id;
  /// empty when `full`.
  std::vector<std::vector<std::uint32_t>> retained;

  const std::vector<std::uint32_t>& list(const TriangleIndex& index, const LabelSchemes& schemes, NodeId helper) const;
};

/// Samples the cover and charges the membership/weight exchange. Returns
/// nullopt (after recording the reason) when some set is not well-balanced.
std::optional<LambdaCover> build_lambda_cover(Network& net, const LabelSchemes& schemes, const TriangleIndex& index,
                                              const PaperConstants& k, Rng& rng, std::string* abortReason = nullptr);

struct ClassPartition {
  std::vector<std::uint32_t> d;    // per triple node
  std::vector<int> c;              // per triple node
  std::size_t maxSelected = 0;     // max |Lambda(u)|
  int maxClass = 0;

  std::vector<std::uint32_t> members(const LabelSchemes& schemes, std::uint32_t u, std::uint32_t v, int alpha) const;
};

std::optional<ClassPartition> identify_class(Network& net, const LabelSchemes& schemes, const TriangleIndex& index,
                                             const PaperConstants& k, Rng& rng, std::string* abortReason = nullptr);

/// |Delta(U, V; W)| per triple node; 0 on the idle nodes with U > V.
std::vector<std::uint32_t> delta_sizes(const TriangleIndex& index, const LabelSchemes& schemes);

/// Class 0 needs |Delta| <= 2n; class c > 0 needs 2^(c-3) n <= |Delta| <= 2^(c+1) n.
bool class_within_bounds(int c, std::size_t delta, std::size_t n);
bool class_bounds_hold(const ClassPartition& classes, const std::vector<std::uint32_t>& deltaSizes,
                       const LabelSchemes& schemes);

/// Largest number of W blocks any (U, V) has in class alpha.
std::size_t max_class_domain(const ClassPartition& classes, const LabelSchemes& schemes, int alpha);
/// Every class alpha has at most alphaSublist * sqrt(n) log n / 2^alpha blocks per (U, V).
bool domain_cap_holds(const ClassPartition& classes, const LabelSchemes& schemes, const PaperConstants& k);

/// For every helper (U, V, x) and every W of class alpha in (U, V), at most
/// deltaCap * 2^alpha * sqrt(n) log n pairs of Lambda_x are completed in W.
bool delta_cap_holds(const TriangleIndex& index, const LabelSchemes& schemes, const LambdaCover& cover,
                     const ClassPartition& classes, const PaperConstants& k);

enum class SearchMode { QuantumSim, Exhaustive };

struct ComputePairsOptions {
  PaperConstants constants;
  SearchMode mode = SearchMode::QuantumSim;
  std::size_t retryBound = 3;
};

struct AlphaReport {
  int alpha = 0;
  std::size_t triples = 0;
  std::size_t sublists = 1;
  std::size_t maxDomain = 0;       // max |T_alpha[U,V]|
  double domainCap = 0.0;
  bool domainCapHolds = true;
  double beta = 0.0;
  std::size_t instances = 0;
  std::size_t coordinates = 0;
  std::size_t maxSolutionFrequency = 0;
  bool frequencyBridge = true;     // max frequency <= beta / 2 on every instance
  bool domainBoundLn = true;       // every instance
  bool domainBoundLog2 = true;
  bool betaBound = true;
  std::uint64_t setupRounds = 0;
  std::uint64_t evalCalls = 0;
  std::uint64_t maxEvalRounds = 0;
  std::uint64_t promiseViolations = 0;
  qsearch::LockstepStats search;
};

struct ComputePairsAudit {
  std::size_t maxGamma = 0;
  bool promiseHolds = true;
  bool coverComplete = true;
  bool wellBalanced = true;
  bool deltaCap = true;
  bool classBounds = true;
  bool domainCap = true;
  bool frequencyBridge = true;
  std::uint64_t typicalityViolations = 0;
  std::uint64_t promiseViolations = 0;
  std::uint64_t maxEvalRounds = 0;
  std::uint64_t maxGroverIterationsPerClass = 0;
  std::uint64_t maxIterationsPerPass = 0;
};

struct ComputePairsResult {
  PairSet pairs;
  bool aborted = false;
  std::string abortReason;
  std::size_t attempts = 0;
  std::vector<AlphaReport> alphas;
  ComputePairsAudit audit;
  ClassPartition classes;
  std::vector<std::uint32_t> deltaSizes;  // |Delta(U,V;W)| per triple node
  std::optional<LambdaCover> cover;       // kept only on request
};

/// FindEdgesWithPromise on the network `net`, a fourth power no smaller than
/// the vertex count of g (g is padded with isolated vertices). S pairs must be
/// over g. `pairWeights`, when given, supplies f(u, v) for the S pairs.
ComputePairsResult compute_pairs(Network& net, const UndirectedWeightedGraph& g, const PairSet& s, Rng& rng,
                                 const ComputePairsOptions& options = {}, bool keepCover = false,
                                 const UndirectedWeightedGraph* pairWeights = nullptr);

nlohmann::json to_json(const AlphaReport& r);
nlohmann::json to_json(const ComputePairsAudit& a);
nlohmann::json to_json(const ComputePairsResult& r);

}  // namespace qclique::triangles
