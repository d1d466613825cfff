#pragma once

#include <cmath>
#include <cstddef>

namespace qclique {

/// Algorithm constants. Defaults are the published values; desk-scale runs may
/// override any of them. All logarithms are natural.
struct PaperConstants {
  double findEdgesLoop = 60;   // while-loop threshold and sampling rate of FindEdges
  double promise = 90;         // Gamma(u,v) <= promise * log n on S
  double lambdaSampling = 10;  // pair sampling rate of the Lambda cover: c log n / sqrt n
  double wellBalanced = 100;   // per-vertex cap: c n^{1/4} log n
  double classSampling = 10;   // IdentifyClass selection rate: c log n / n
  double classThreshold = 10;  // d < c 2^c log n
  double identifyAbort = 60;   // |Lambda(u)| > c log n aborts
  double pairsPerNode = 100;   // m = c n log n
  double deltaCap = 100;       // |Lambda_x cap Delta| <= c 2^alpha sqrt n log n
  double evalPromise = 800;    // |L_w| <= c 2^alpha sqrt n log n
  double alphaSublist = 720;   // sublists per triple: 2^alpha / (c log n)
  double typicalDomain = 36;   // |X| < m / (c log m)
  double typicalBeta = 8;      // beta > c m / |X|
};

inline double log_n(std::size_t n) { return std::log(static_cast<double>(n)); }

}  // namespace qclique
