#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qclique/constants.hpp"
#include "qclique/network.hpp"
#include "qclique/qsearch.hpp"
#include "qclique/reductions.hpp"
#include "qclique/triangles.hpp"

namespace qclique::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string kind = "random";  // random | file
  std::string path;
  std::optional<std::uint64_t> seed;  // defaults to the run seed
};

struct RunConfig {
  std::size_t n = 16;
  std::int64_t W = 4;
  double density = 0.3;
  std::size_t planted = 4;
  GraphSource graph;
  std::string pairs = "all";  // all | none | explicit
  std::vector<VertexPair> pairList;
  std::uint64_t seed = 1;
  triangles::SearchMode mode = triangles::SearchMode::QuantumSim;
  NetMode net = NetMode::Audit;
  std::size_t retryBound = 3;
  PaperConstants constants;
  std::size_t trials = 100;
  std::vector<std::string> checks{"cover", "class-bounds", "domain-cap", "delta-cap", "typical-projection"};
  std::vector<std::size_t> sizes{16, 81, 256};
  std::vector<std::pair<std::size_t, std::size_t>> projectionCases{{9, 90}, {16, 200}, {25, 400}};  // (|X|, m)
  std::size_t projectionPatterns = 50;
};

/// Validates and fills a config; unknown keys are errors.
RunConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const RunConfig& c);
std::string mode_name(triangles::SearchMode m);
triangles::SearchMode parse_mode(const std::string& s);

/// Totals over every compute_pairs call of a run.
struct AuditTotals {
  std::size_t calls = 0;
  std::size_t aborted = 0;
  std::size_t attempts = 0;
  std::size_t maxGamma = 0;
  bool promiseHolds = true;
  bool coverComplete = true;
  bool wellBalanced = true;
  bool deltaCap = true;
  bool classBounds = true;
  bool domainCap = true;
  bool frequencyBridge = true;
  std::size_t deltaCapCalls = 0;                // calls whose deltaCap audit passed
  std::size_t bridgeFailuresUnderDeltaCap = 0;  // of those, calls without the frequency bridge
  bool domainBoundLn = true;
  bool domainBoundLog2 = true;
  bool betaBound = true;
  std::uint64_t typicalityViolations = 0;
  std::uint64_t evalPromiseViolations = 0;
  std::uint64_t maxEvalRounds = 0;
  std::uint64_t maxGroverIterationsPerClass = 0;
  std::uint64_t maxIterationsPerPass = 0;
  int maxClass = 0;

  void add(const triangles::ComputePairsResult& r);
  nlohmann::json to_json() const;
};

/// compute_pairs on one shared network, as a promise solver.
class TriangleEngine {
 public:
  TriangleEngine(std::size_t hostNodes, const RunConfig& config);

  Network& network() { return net_; }
  const Network& network() const { return net_; }
  const AuditTotals& totals() const { return totals_; }

  reductions::PromiseOutcome solve(const reductions::PromiseCall& call, Rng& rng);
  reductions::PromiseSolver solver();

 private:
  Network net_;
  triangles::ComputePairsOptions options_;
  AuditTotals totals_;
};

struct Report {
  nlohmann::json json;
  bool pass = false;
};

/// Text for a report that loses nothing between runs: sorted keys, 2-space indent.
std::string render(const nlohmann::json& j);

Report run_apsp(const RunConfig& config);
Report run_find_edges(const RunConfig& config);
Report verify_lemmas(const RunConfig& config);

struct BenchRow {
  std::size_t n = 0;
  std::uint64_t classicalRounds = 0;
  std::uint64_t quantumChargedRounds = 0;
  std::uint64_t groverIterations = 0;
  std::uint64_t maxEvalRounds = 0;
  std::uint64_t maxGroverIterationsPerClass = 0;
  std::uint64_t gatherRounds = 0;
  std::uint64_t coverRounds = 0;
  std::uint64_t classRounds = 0;
  std::uint64_t searchClassicalRounds = 0;
  double evalPerLogSquared = 0.0;       // maxEvalRounds / (ln n)^2
  double groverPerQuarterLog = 0.0;     // per-class iterations / (n^(1/4) ln n)
  bool aborted = false;
};

std::vector<BenchRow> bench_rounds(const RunConfig& config);
std::string bench_csv(const std::vector<BenchRow>& rows);

/// One random family for the typical-projection check: m solution sets of
/// size in [1, min(|X|/2, 4)] and a random b pattern, beta = ceil(8m/|X|) + 1.
struct ProjectionCase {
  std::size_t domain = 0;
  std::size_t m = 0;
  double beta = 0.0;
  qsearch::ProjectionCheck check;
  bool withinSigma = false;  // Monte-Carlo <= estimate + 3 sigma
  bool pass() const { return !check.skipped && check.pass && withinSigma; }
};

std::vector<ProjectionCase> projection_suite(std::size_t domain, std::size_t m, std::size_t patterns, Rng& rng,
                                             std::size_t monteCarloSamples = 20000);

/// Wilson score interval at 95%.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials);

}  // namespace qclique::cli
