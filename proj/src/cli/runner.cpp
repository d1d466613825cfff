#include "qclique/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "qclique/graph_io.hpp"
#include "qclique/instances.hpp"
#include "qclique/labels.hpp"
#include "qclique/oracles.hpp"

namespace qclique::cli {

using nlohmann::json;

namespace {

struct NamedConstant {
  const char* name;
  double PaperConstants::*field;
};

constexpr NamedConstant kConstants[] = {
    {"findEdgesLoop", &PaperConstants::findEdgesLoop},   {"promise", &PaperConstants::promise},
    {"lambdaSampling", &PaperConstants::lambdaSampling}, {"wellBalanced", &PaperConstants::wellBalanced},
    {"classSampling", &PaperConstants::classSampling},   {"classThreshold", &PaperConstants::classThreshold},
    {"identifyAbort", &PaperConstants::identifyAbort},   {"pairsPerNode", &PaperConstants::pairsPerNode},
    {"deltaCap", &PaperConstants::deltaCap},             {"evalPromise", &PaperConstants::evalPromise},
    {"alphaSublist", &PaperConstants::alphaSublist},     {"typicalDomain", &PaperConstants::typicalDomain},
    {"typicalBeta", &PaperConstants::typicalBeta},
};

const std::set<std::string> kChecks{"cover", "class-bounds", "domain-cap", "delta-cap", "typical-projection"};

// Largest network the fine-block masks support.
constexpr std::size_t kMaxNodes = 4096;

template <typename T>
T get(const json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

bool is_fourth_power(std::size_t n) { return n >= 1 && next_fourth_power(n) == n; }

std::uint64_t graph_seed(const RunConfig& c) { return c.graph.seed.value_or(c.seed); }

WeightedDigraph load_digraph(const RunConfig& c) {
  if (c.graph.kind == "file") {
    const EdgeList e = read_graph_file(c.graph.path);
    if (!e.directed) throw ConfigError("apsp needs a directed graph file");
    return e.to_digraph();
  }
  Rng rng = Rng(graph_seed(c)).substream("graph");
  return instances::random_digraph(c.n, c.W, c.density, rng);
}

UndirectedWeightedGraph load_undirected(const RunConfig& c) {
  if (c.graph.kind == "file") {
    const EdgeList e = read_graph_file(c.graph.path);
    if (e.directed) throw ConfigError("find-edges needs an undirected graph file");
    return e.to_undirected();
  }
  Rng rng = Rng(graph_seed(c)).substream("graph");
  return instances::planted_triangles(c.n, c.W, c.density, c.planted, rng);
}

json pairs_to_json(const PairSet& s) {
  json out = json::array();
  for (const VertexPair& p : s) out.push_back({p.lo, p.hi});
  return out;
}

json rounds_json(const RoundLedger& l) {
  const double classical = static_cast<double>(l.classical_rounds());
  const double quantum = static_cast<double>(l.quantum_charged_rounds());
  return {{"classical", l.classical_rounds()},
          {"quantumCharged", l.quantum_charged_rounds()},
          {"total", l.total_rounds()},
          {"normalizationFactor", 3},
          {"normalized", {{"classical", classical / 3.0}, {"quantumCharged", quantum / 3.0},
                          {"total", (classical + quantum) / 3.0}}}};
}

json hosting_json(std::size_t vertices, std::size_t hosted, std::size_t nodes) {
  json h{{"vertices", vertices}, {"hostedVertices", hosted}, {"nodes", nodes}, {"padding", nodes - hosted}};
  if (nodes > hosted)
    h["note"] = std::to_string(hosted) + " vertices padded with " + std::to_string(nodes - hosted) +
                " isolated vertices to " + std::to_string(nodes) + " nodes";
  return h;
}

bool totals_pass(const AuditTotals& t) {
  return t.aborted == 0 && t.promiseHolds && t.typicalityViolations == 0 && t.evalPromiseViolations == 0 &&
         t.bridgeFailuresUnderDeltaCap == 0;
}

json check_json(const std::string& name, std::size_t trials, std::size_t qualifying, std::size_t passes,
                double threshold) {
  const auto [lo, hi] = wilson_interval(passes, qualifying);
  const double rate = qualifying == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(qualifying);
  return {{"name", name},
          {"trials", trials},
          {"qualifying", qualifying},
          {"passes", passes},
          {"rate", rate},
          {"ci95", {lo, hi}},
          {"threshold", threshold},
          {"pass", qualifying > 0 && rate >= threshold}};
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string mode_name(triangles::SearchMode m) {
  return m == triangles::SearchMode::QuantumSim ? "quantum-sim" : "oracle-exhaustive";
}

triangles::SearchMode parse_mode(const std::string& s) {
  if (s == "quantum-sim") return triangles::SearchMode::QuantumSim;
  if (s == "oracle-exhaustive") return triangles::SearchMode::Exhaustive;
  throw ConfigError("mode must be quantum-sim or oracle-exhaustive, got '" + s + "'");
}

RunConfig parse_config(const json& j) {
  static const std::set<std::string> known{"n",      "W",    "density", "planted", "graph",  "pairs",
                                           "seed",   "mode", "net",     "retryBound", "constants",
                                           "trials", "checks", "sizes", "projection"};
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (!known.contains(key)) throw ConfigError("unknown config key '" + key + "'");

  RunConfig c;
  try {
    c.n = get(j, "n", c.n);
    c.W = get(j, "W", c.W);
    c.density = get(j, "density", c.density);
    c.planted = get(j, "planted", c.planted);
    c.seed = get(j, "seed", c.seed);
    c.retryBound = get(j, "retryBound", c.retryBound);
    c.trials = get(j, "trials", c.trials);
    if (j.contains("mode")) c.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("net")) {
      const auto net = j.at("net").get<std::string>();
      if (net == "strict") c.net = NetMode::Strict;
      else if (net == "audit") c.net = NetMode::Audit;
      else throw ConfigError("net must be strict or audit");
    }
    if (j.contains("graph")) {
      const json& g = j.at("graph");
      for (const auto& [key, value] : g.items())
        if (key != "source" && key != "path" && key != "seed") throw ConfigError("unknown graph key '" + key + "'");
      c.graph.kind = get<std::string>(g, "source", "random");
      if (c.graph.kind != "random" && c.graph.kind != "file") throw ConfigError("graph.source must be random or file");
      c.graph.path = get<std::string>(g, "path", "");
      if (c.graph.kind == "file" && c.graph.path.empty()) throw ConfigError("graph.path is required for file sources");
      if (g.contains("seed")) c.graph.seed = g.at("seed").get<std::uint64_t>();
    }
    if (j.contains("pairs")) {
      const json& p = j.at("pairs");
      if (p.is_string()) {
        c.pairs = p.get<std::string>();
        if (c.pairs != "all" && c.pairs != "none") throw ConfigError("pairs must be all, none or a list");
      } else {
        c.pairs = "explicit";
        for (const json& e : p) {
          const auto uv = e.get<std::vector<Vertex>>();
          if (uv.size() != 2 || uv[0] == uv[1]) throw ConfigError("each pair needs two distinct vertices");
          c.pairList.push_back(VertexPair::of(uv[0], uv[1]));
        }
      }
    }
    if (j.contains("constants")) {
      for (const auto& [key, value] : j.at("constants").items()) {
        const auto it = std::find_if(std::begin(kConstants), std::end(kConstants),
                                     [&](const NamedConstant& k) { return key == k.name; });
        if (it == std::end(kConstants)) throw ConfigError("unknown constant '" + key + "'");
        const double v = value.get<double>();
        if (!(v > 0)) throw ConfigError("constant '" + key + "' must be positive");
        c.constants.*(it->field) = v;
      }
    }
    if (j.contains("checks")) {
      c.checks = j.at("checks").get<std::vector<std::string>>();
      for (const auto& name : c.checks)
        if (!kChecks.contains(name)) throw ConfigError("unknown check '" + name + "'");
    }
    if (j.contains("sizes")) c.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    if (j.contains("projection")) {
      const json& p = j.at("projection");
      c.projectionPatterns = get(p, "patterns", c.projectionPatterns);
      if (p.contains("cases")) {
        c.projectionCases.clear();
        for (const json& e : p.at("cases")) {
          const auto xm = e.get<std::vector<std::size_t>>();
          if (xm.size() != 2 || xm[0] < 2 || xm[1] < 1) throw ConfigError("projection cases are [|X|, m] pairs");
          c.projectionCases.emplace_back(xm[0], xm[1]);
        }
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }

  if (c.n < 1) throw ConfigError("n must be positive");
  if (c.W < 1) throw ConfigError("W must be positive");
  if (!(c.density >= 0 && c.density <= 1)) throw ConfigError("density must lie in [0, 1]");
  if (c.retryBound < 1) throw ConfigError("retryBound must be at least 1");
  for (std::size_t s : c.sizes)
    if (!is_fourth_power(s) || s > kMaxNodes) throw ConfigError("bench sizes must be fourth powers up to 4096");
  for (const VertexPair& p : c.pairList)
    if (p.hi >= c.n && c.graph.kind == "random") throw ConfigError("pair vertex out of range");
  return c;
}

json to_json(const RunConfig& c) {
  json constants = json::object();
  for (const NamedConstant& k : kConstants) constants[k.name] = c.constants.*(k.field);
  json graph{{"source", c.graph.kind}};
  if (!c.graph.path.empty()) graph["path"] = c.graph.path;
  if (c.graph.seed) graph["seed"] = *c.graph.seed;
  json pairs = c.pairs;
  if (c.pairs == "explicit") {
    pairs = json::array();
    for (const VertexPair& p : c.pairList) pairs.push_back({p.lo, p.hi});
  }
  json cases = json::array();
  for (const auto& [x, m] : c.projectionCases) cases.push_back({x, m});
  return {{"n", c.n},
          {"W", c.W},
          {"density", c.density},
          {"planted", c.planted},
          {"graph", graph},
          {"pairs", pairs},
          {"seed", c.seed},
          {"mode", mode_name(c.mode)},
          {"net", c.net == NetMode::Strict ? "strict" : "audit"},
          {"retryBound", c.retryBound},
          {"constants", constants},
          {"trials", c.trials},
          {"checks", c.checks},
          {"sizes", c.sizes},
          {"projection", {{"cases", cases}, {"patterns", c.projectionPatterns}}}};
}

void AuditTotals::add(const triangles::ComputePairsResult& r) {
  const auto& a = r.audit;
  ++calls;
  aborted += r.aborted ? 1 : 0;
  attempts += r.attempts;
  maxGamma = std::max(maxGamma, a.maxGamma);
  promiseHolds = promiseHolds && a.promiseHolds;
  coverComplete = coverComplete && a.coverComplete;
  wellBalanced = wellBalanced && a.wellBalanced;
  deltaCap = deltaCap && a.deltaCap;
  classBounds = classBounds && a.classBounds;
  domainCap = domainCap && a.domainCap;
  frequencyBridge = frequencyBridge && a.frequencyBridge;
  if (a.deltaCap) ++deltaCapCalls;
  if (a.deltaCap && !a.frequencyBridge) ++bridgeFailuresUnderDeltaCap;
  for (const auto& alpha : r.alphas) {
    if (alpha.instances == 0) continue;
    domainBoundLn = domainBoundLn && alpha.domainBoundLn;
    domainBoundLog2 = domainBoundLog2 && alpha.domainBoundLog2;
    betaBound = betaBound && alpha.betaBound;
  }
  typicalityViolations += a.typicalityViolations;
  evalPromiseViolations += a.promiseViolations;
  maxEvalRounds = std::max(maxEvalRounds, a.maxEvalRounds);
  maxGroverIterationsPerClass = std::max(maxGroverIterationsPerClass, a.maxGroverIterationsPerClass);
  maxIterationsPerPass = std::max(maxIterationsPerPass, a.maxIterationsPerPass);
  maxClass = std::max(maxClass, r.classes.maxClass);
}

json AuditTotals::to_json() const {
  return {{"promiseCalls", calls},
          {"aborted", aborted},
          {"attempts", attempts},
          {"promise", {{"holds", promiseHolds}, {"maxGamma", maxGamma}}},
          {"cover", {{"complete", coverComplete}, {"wellBalanced", wellBalanced}}},
          {"classBounds", classBounds},
          {"deltaCap", deltaCap},
          {"domainCap", domainCap},
          {"maxClass", maxClass},
          {"hypotheses",
           {{"domainBoundLn", domainBoundLn},
            {"domainBoundLog2", domainBoundLog2},
            {"betaBound", betaBound},
            {"solutionFrequency", frequencyBridge},
            {"deltaCapCalls", deltaCapCalls},
            {"solutionFrequencyFailuresUnderDeltaCap", bridgeFailuresUnderDeltaCap}}},
          {"typicalityViolations", typicalityViolations},
          {"evalPromiseViolations", evalPromiseViolations},
          {"maxEvalRounds", maxEvalRounds},
          {"maxGroverIterationsPerClass", maxGroverIterationsPerClass},
          {"maxIterationsPerPass", maxIterationsPerPass}};
}

TriangleEngine::TriangleEngine(std::size_t hostNodes, const RunConfig& config) : net_(hostNodes, config.net) {
  options_.constants = config.constants;
  options_.mode = config.mode;
  options_.retryBound = config.retryBound;
}

reductions::PromiseOutcome TriangleEngine::solve(const reductions::PromiseCall& call, Rng& rng) {
  auto r = triangles::compute_pairs(net_, call.sides, call.s, rng, options_, false, &call.pairs);
  totals_.add(r);
  return {std::move(r.pairs), r.aborted};
}

reductions::PromiseSolver TriangleEngine::solver() {
  return [this](const reductions::PromiseCall& call, Rng& rng) { return solve(call, rng); };
}

std::string render(const json& j) { return j.dump(2) + "\n"; }

Report run_apsp(const RunConfig& config) {
  const WeightedDigraph g = load_digraph(config);
  const std::size_t n = g.vertex_count();
  if (3 * n > kMaxNodes) throw ConfigError("apsp supports at most 1365 vertices");
  const std::size_t host = next_fourth_power(3 * n);

  Report rep;
  json& out = rep.json;
  out["command"] = "apsp";
  out["config"] = to_json(config);
  out["graph"] = {{"vertices", n}, {"arcs", g.arc_count()}, {"maxAbsWeight", g.max_abs_weight()}};
  out["hosting"] = hosting_json(n, 3 * n, host);

  TriangleEngine engine(host, config);
  const Rng runRng = Rng(config.seed).substream("apsp");
  std::uint64_t findEdgesCalls = 0, products = 0, maxCalls = 0, callBound = 0, innerAborts = 0;
  bool withinBound = true;
  reductions::FindEdgesFn fe = [&](const UndirectedWeightedGraph& tg, const PairSet& s) {
    Rng rng = runRng.substream("find-edges", {findEdgesCalls++});
    return reductions::find_edges(tg, s, engine.solver(), rng, config.constants);
  };
  reductions::ProductFn product = [&](const DistMatrix& a, const DistMatrix& b) {
    const auto r = reductions::distance_product_via_triangles(a, b, fe, host);
    ++products;
    maxCalls = std::max<std::uint64_t>(maxCalls, r.calls);
    callBound = std::max<std::uint64_t>(callBound, r.callBound);
    withinBound = withinBound && r.calls <= r.callBound;
    innerAborts += r.aborts;
    return r.product;
  };

  std::optional<DistMatrix> dist;
  std::string error;
  try {
    dist = reductions::apsp(g, product);
  } catch (const NegativeCycleError& e) {
    error = std::string("negative cycle: ") + e.what();
  } catch (const BandwidthViolation& e) {
    error = std::string("bandwidth violation: ") + e.what();
  }

  std::optional<DistMatrix> exact;
  try {
    exact = oracles::floyd_warshall(g);
  } catch (const NegativeCycleError&) {
  }
  const bool agreement = dist && exact ? *dist == *exact : (!dist && !exact && error.rfind("negative", 0) == 0);

  out["distances"] = dist ? matrix_to_json(*dist) : json(nullptr);
  out["negativeCycle"] = error.rfind("negative", 0) == 0;
  if (!error.empty()) out["error"] = error;
  out["oracle"] = {{"name", "floyd-warshall"}, {"negativeCycle", !exact.has_value()}, {"agreement", agreement}};
  out["products"] = {{"count", products},
                     {"squarings", reductions::squaring_count(n)},
                     {"findEdgesCalls", findEdgesCalls},
                     {"maxCallsPerProduct", maxCalls},
                     {"callBound", callBound},
                     {"withinCallBound", withinBound},
                     {"innerAborts", innerAborts}};
  const RoundLedger& ledger = engine.network().ledger();
  out["ledger"] = ledger.to_json();
  out["rounds"] = rounds_json(ledger);
  json audit = engine.totals().to_json();
  audit["bandwidthViolations"] = ledger.violation_count();
  out["audit"] = audit;
  rep.pass = agreement && error.empty() && withinBound && ledger.violation_count() == 0 && totals_pass(engine.totals());
  out["pass"] = rep.pass;
  return rep;
}

Report run_find_edges(const RunConfig& config) {
  const UndirectedWeightedGraph g = load_undirected(config);
  const std::size_t n = g.vertex_count();
  if (n > kMaxNodes) throw ConfigError("find-edges supports at most 4096 vertices");
  PairSet s(n);
  if (config.pairs == "all") s = PairSet::all_pairs(n);
  for (const VertexPair& p : config.pairList) {
    if (p.hi >= n) throw ConfigError("pair vertex out of range");
    s.insert(p);
  }
  const std::size_t host = next_fourth_power(n);

  Report rep;
  json& out = rep.json;
  out["command"] = "find-edges";
  out["config"] = to_json(config);
  out["graph"] = {{"vertices", n}, {"edges", g.edge_count()}, {"queriedPairs", s.size()}};
  out["hosting"] = hosting_json(n, n, host);

  TriangleEngine engine(host, config);
  Rng rng = Rng(config.seed).substream("find-edges");
  std::string error;
  reductions::FindEdgesResult found;
  try {
    found = reductions::find_edges(g, s, engine.solver(), rng, config.constants);
  } catch (const BandwidthViolation& e) {
    error = std::string("bandwidth violation: ") + e.what();
  }

  bool agreement = false;
  if (n <= oracles::kMaxTriangleVertices) {
    agreement = error.empty() && found.pairs == oracles::brute_find_edges(g, s);
    out["oracle"] = {{"name", "brute-force"}, {"agreement", agreement}};
  } else {
    agreement = error.empty();
    out["oracle"] = {{"name", "brute-force"}, {"skipped", "more than 256 vertices"}};
  }
  out["pairs"] = pairs_to_json(found.pairs);
  if (!error.empty()) out["error"] = error;
  out["findEdges"] = {{"calls", found.calls}, {"loopIterations", found.loopIterations}, {"aborts", found.aborts}};
  const RoundLedger& ledger = engine.network().ledger();
  out["ledger"] = ledger.to_json();
  out["rounds"] = rounds_json(ledger);
  json audit = engine.totals().to_json();
  audit["bandwidthViolations"] = ledger.violation_count();
  out["audit"] = audit;
  rep.pass = agreement && ledger.violation_count() == 0 && totals_pass(engine.totals());
  out["pass"] = rep.pass;
  return rep;
}

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;
  const double t = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / t;
  const double denom = 1 + z * z / t;
  const double centre = (p + z * z / (2 * t)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / t + z * z / (4 * t * t)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::vector<ProjectionCase> projection_suite(std::size_t domain, std::size_t m, std::size_t patterns, Rng& rng,
                                             std::size_t monteCarloSamples) {
  const double beta = std::ceil(8.0 * static_cast<double>(m) / static_cast<double>(domain)) + 1;
  const auto cap = static_cast<std::size_t>(beta / 2);
  std::vector<ProjectionCase> out;
  for (std::size_t t = 0; t < patterns; ++t) {
    // Solution sets of size 1..min(|X|/2, 4), no element in more than beta/2
    // of them. With beta/2 about 4m/|X| larger sets cannot all be filled.
    std::vector<std::size_t> freq(domain, 0);
    std::vector<std::vector<std::uint32_t>> family(m);
    std::vector<std::uint32_t> order(domain);
    for (auto& a : family) {
      const std::size_t want = 1 + rng.below(std::clamp<std::size_t>(domain / 2, 1, 4));
      for (std::uint32_t x = 0; x < domain; ++x) order[x] = x;
      std::shuffle(order.begin(), order.end(), rng);
      for (std::uint32_t x : order)
        if (a.size() < want && freq[x] < cap) {
          a.push_back(x);
          ++freq[x];
        }
      std::sort(a.begin(), a.end());
    }
    std::vector<bool> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = rng.bernoulli(0.5);
    ProjectionCase c;
    c.domain = domain;
    c.m = m;
    c.beta = beta;
    c.check = qsearch::projection_bound_check(qsearch::select_sets(b, family, domain), family, domain, beta, rng,
                                              monteCarloSamples);
    c.withinSigma = c.check.monteCarlo <= c.check.upperEstimate + 3 * c.check.monteCarloSigma + 1e-12;
    out.push_back(c);
  }
  return out;
}

Report verify_lemmas(const RunConfig& config) {
  Report rep;
  json& out = rep.json;
  out["command"] = "verify";
  out["config"] = to_json(config);
  json checks = json::array();
  const auto wanted = [&](const char* name) {
    return std::find(config.checks.begin(), config.checks.end(), name) != config.checks.end();
  };
  const Rng root = Rng(config.seed).substream("verify");

  const bool triangleChecks = wanted("cover") || wanted("class-bounds") || wanted("domain-cap") || wanted("delta-cap");
  if (triangleChecks) {
    const std::size_t n = config.n;
    if (!is_fourth_power(n) || n < 81 || n > kMaxNodes)
      throw ConfigError("triangle checks need n a fourth power between 81 and 4096");
    const LabelSchemes schemes(n);
    // Heavy triple: 4n pairs across coarse blocks 0 and 1 completed in the
    // first fine block of coarse block 2.
    const auto fine = static_cast<std::uint32_t>(2 * schemes.q());
    const auto g = instances::planted_heavy_triple(n, 4 * n, fine);
    const PairSet s = PairSet::all_pairs(n);
    const auto index = triangles::TriangleIndex::build(g, s, schemes);
    const auto deltas = triangles::delta_sizes(index, schemes);

    std::size_t coverOk = 0, classTrials = 0, classOk = 0, domainOk = 0, deltaTrials = 0, deltaOk = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      Network net(n, NetMode::Audit);
      Rng coverRng = root.substream("cover", {t});
      const auto cover = triangles::build_lambda_cover(net, schemes, index, config.constants, coverRng);
      if (cover && cover->complete && cover->wellBalanced) ++coverOk;
      Rng classRng = root.substream("classes", {t});
      const auto classes = triangles::identify_class(net, schemes, index, config.constants, classRng);
      if (!classes) continue;
      ++classTrials;
      if (!triangles::class_bounds_hold(*classes, deltas, schemes)) continue;
      ++classOk;
      domainOk += triangles::domain_cap_holds(*classes, schemes, config.constants) ? 1 : 0;
      if (cover) {
        ++deltaTrials;
        deltaOk += triangles::delta_cap_holds(index, schemes, *cover, *classes, config.constants) ? 1 : 0;
      }
    }
    if (wanted("cover")) checks.push_back(check_json("cover", config.trials, config.trials, coverOk, 0.90));
    if (wanted("class-bounds")) checks.push_back(check_json("class-bounds", config.trials, config.trials, classOk, 0.95));
    if (wanted("domain-cap")) checks.push_back(check_json("domain-cap", config.trials, classOk, domainOk, 1.0));
    if (wanted("delta-cap")) checks.push_back(check_json("delta-cap", config.trials, deltaTrials, deltaOk, 1.0));
  }

  if (wanted("typical-projection")) {
    std::size_t total = 0, passes = 0;
    json cases = json::array();
    for (const auto& [x, m] : config.projectionCases) {
      Rng rng = root.substream("projection", {x, m});
      const auto suite = projection_suite(x, m, config.projectionPatterns, rng);
      std::size_t ok = 0;
      double worst = 0.0;
      for (const auto& c : suite) {
        ok += c.pass() ? 1 : 0;
        worst = std::max(worst, c.check.upperEstimate);
      }
      total += suite.size();
      passes += ok;
      cases.push_back({{"domain", x},
                       {"m", m},
                       {"beta", suite.empty() ? 0.0 : suite.front().beta},
                       {"bound", suite.empty() ? 0.0 : suite.front().check.bound},
                       {"maxEstimate", worst},
                       {"passes", ok},
                       {"patterns", suite.size()}});
    }
    json c = check_json("typical-projection", total, total, passes, 1.0);
    c["cases"] = cases;
    checks.push_back(c);
  }

  out["checks"] = checks;
  rep.pass = true;
  for (const json& c : checks) rep.pass = rep.pass && c.at("pass").get<bool>();
  out["pass"] = rep.pass;
  return rep;
}

std::vector<BenchRow> bench_rounds(const RunConfig& config) {
  std::vector<BenchRow> rows;
  triangles::ComputePairsOptions options{config.constants, config.mode, config.retryBound};
  for (std::size_t n : config.sizes) {
    Rng graphRng = Rng(graph_seed(config)).substream("bench-graph", {n});
    const auto g = instances::planted_triangles(n, config.W, config.density, config.planted, graphRng);
    Network net(n, config.net);
    Rng rng = Rng(config.seed).substream("bench", {n});
    const auto r = triangles::compute_pairs(net, g, PairSet::all_pairs(n), rng, options);

    BenchRow row;
    row.n = n;
    const RoundLedger& l = net.ledger();
    row.classicalRounds = l.classical_rounds();
    row.quantumChargedRounds = l.quantum_charged_rounds();
    for (const auto& a : r.alphas) row.groverIterations += a.search.groverIterations;
    row.maxEvalRounds = r.audit.maxEvalRounds;
    row.maxGroverIterationsPerClass = r.audit.maxGroverIterationsPerClass;
    for (const PhaseRecord& p : l.phases()) {
      if (p.phase == "gather") row.gatherRounds += p.classicalRounds;
      else if (p.phase == "lambda-cover") row.coverRounds += p.classicalRounds;
      else if (p.phase == "identify-class") row.classRounds += p.classicalRounds;
      else if (p.phase.rfind("alpha-", 0) == 0) row.searchClassicalRounds += p.classicalRounds;
    }
    const double ln = log_n(n);
    if (n > 1) {
      row.evalPerLogSquared = static_cast<double>(row.maxEvalRounds) / (ln * ln);
      row.groverPerQuarterLog =
          static_cast<double>(row.maxGroverIterationsPerClass) / (std::pow(static_cast<double>(n), 0.25) * ln);
    }
    row.aborted = r.aborted;
    rows.push_back(row);
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "n,classicalRounds,quantumChargedRounds,groverIterations,maxEvalRounds,maxGroverIterationsPerClass,"
        "gatherRounds,coverRounds,classRounds,searchClassicalRounds,evalPerLogSquared,groverPerQuarterLog,aborted\n";
  for (const BenchRow& r : rows)
    os << r.n << ',' << r.classicalRounds << ',' << r.quantumChargedRounds << ',' << r.groverIterations << ','
       << r.maxEvalRounds << ',' << r.maxGroverIterationsPerClass << ',' << r.gatherRounds << ',' << r.coverRounds
       << ',' << r.classRounds << ',' << r.searchClassicalRounds << ',' << fixed(r.evalPerLogSquared) << ','
       << fixed(r.groverPerQuarterLog) << ',' << (r.aborted ? 1 : 0) << '\n';
  return os.str();
}

}  // namespace qclique::cli
