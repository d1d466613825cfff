// Acceptance suite: one PASS/FAIL line per criterion. With arguments, only the
// listed criteria run (e.g. `acceptance 4 5`); the exit code is 0 only when
// every criterion that ran passed.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

#include "qclique/dist_matrix.hpp"
#include "qclique/instances.hpp"
#include "qclique/labels.hpp"
#include "qclique/oracles.hpp"
#include "qclique/qsearch.hpp"
#include "qclique/reductions.hpp"
#include "qclique/runner.hpp"
#include "qclique/triangles.hpp"

using namespace qclique;

namespace {

constexpr std::size_t kRuns = 100;
constexpr std::size_t kApspPasses = 95;
constexpr std::size_t kFindEdgesPasses = 95;
constexpr double kGroverTolerance = 1e-9;
constexpr std::size_t kGroverMaxExtended = 64;
constexpr std::size_t kProjectionPatterns = 50;
constexpr double kEvalConstant = 40.0;    // eval rounds per call <= c (ln n)^2
constexpr double kGroverConstant = 80.0;  // iterations per class <= c' n^(1/4) ln n
constexpr double kCoverRate = 0.90;
constexpr double kClassRate = 0.95;
constexpr std::size_t kAuditN = 256;
constexpr std::size_t kProductRuns = 50;
constexpr double kDensity = 0.3;

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  failures += pass ? 0 : 1;
}

std::string fmt(const char* f, double a = 0, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Audit samples shared by criteria 1, 2, 6 and 7.
struct RunAudit {
  std::size_t host = 0;
  bool aborted = false;
  bool error = false;
  std::size_t bandwidthViolations = 0;
  std::uint64_t maxEvalRounds = 0;
  std::uint64_t maxGroverPerClass = 0;
  std::uint64_t typicalityViolations = 0;
  std::size_t deltaCapCalls = 0;
  std::size_t bridgeFailures = 0;
};

std::vector<RunAudit> audits;

void record(std::size_t host, const triangles::ComputePairsResult& r, const Network& net) {
  RunAudit a;
  a.host = host;
  a.aborted = r.aborted;
  a.bandwidthViolations = net.ledger().violation_count();
  a.maxEvalRounds = r.audit.maxEvalRounds;
  a.maxGroverPerClass = r.audit.maxGroverIterationsPerClass;
  a.typicalityViolations = r.audit.typicalityViolations;
  a.deltaCapCalls = r.audit.deltaCap ? 1 : 0;
  a.bridgeFailures = r.audit.deltaCap && !r.audit.frequencyBridge ? 1 : 0;
  audits.push_back(a);
}

void criterion1() {
  std::size_t worst = kRuns;
  std::string detail;
  for (std::size_t n : {16u, 81u})
    for (std::int64_t w : {4, 16}) {
      std::size_t ok = 0;
      const auto t0 = std::chrono::steady_clock::now();
      for (std::size_t run = 0; run < kRuns; ++run) {
        cli::RunConfig c;
        c.n = n;
        c.W = w;
        c.density = kDensity;
        c.seed = 1000 * n + 100 * static_cast<std::size_t>(w) + run;
        c.net = NetMode::Strict;
        const cli::Report rep = cli::run_apsp(c);
        const auto& j = rep.json;
        const bool match = j.at("oracle").at("agreement").get<bool>() && !j.contains("error");
        ok += match ? 1 : 0;

        const auto& audit = j.at("audit");
        RunAudit a;
        a.host = j.at("hosting").at("nodes").get<std::size_t>();
        a.aborted = audit.at("aborted").get<std::size_t>() > 0;
        a.error = j.contains("error");
        a.bandwidthViolations = audit.at("bandwidthViolations").get<std::size_t>();
        a.maxEvalRounds = audit.at("maxEvalRounds").get<std::uint64_t>();
        a.maxGroverPerClass = audit.at("maxGroverIterationsPerClass").get<std::uint64_t>();
        a.typicalityViolations = audit.at("typicalityViolations").get<std::uint64_t>();
        a.deltaCapCalls = audit.at("hypotheses").at("deltaCapCalls").get<std::size_t>();
        a.bridgeFailures = audit.at("hypotheses").at("solutionFrequencyFailuresUnderDeltaCap").get<std::size_t>();
        audits.push_back(a);
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      worst = std::min(worst, ok);
      detail += fmt("n=%.0f W=%.0f %.0f/100 (%.0fs); ", static_cast<double>(n), static_cast<double>(w),
                    static_cast<double>(ok), secs);
    }
  report(1, "end-to-end apsp", worst >= kApspPasses, detail + "need >= 95 each");
}

void criterion2() {
  std::size_t worst = kRuns;
  std::string detail;
  for (std::size_t n : {16u, 81u}) {
    std::size_t ok = 0;
    const PairSet s = PairSet::all_pairs(n);
    for (std::size_t run = 0; run < kRuns; ++run) {
      Rng rng(7000 + 1000 * n + run);
      const auto g = instances::planted_triangles(n, 8, kDensity, n / 4, rng);
      Network net(n, NetMode::Strict);
      Rng solve = rng.substream("solve");
      bool match = false;
      try {
        const auto r = triangles::compute_pairs(net, g, s, solve);
        match = !r.aborted && r.pairs == oracles::brute_find_edges(g, s);
        record(n, r, net);
      } catch (const BandwidthViolation&) {
        RunAudit a;
        a.host = n;
        a.error = true;
        a.bandwidthViolations = 1;
        audits.push_back(a);
      }
      ok += match ? 1 : 0;
    }
    worst = std::min(worst, ok);
    detail += fmt("n=%.0f %.0f/100; ", static_cast<double>(n), static_cast<double>(ok));
  }
  report(2, "compute_pairs vs brute force", worst >= kFindEdgesPasses, detail + "need >= 95 each");
}

void criterion3() {
  triangles::ComputePairsOptions exhaustive;
  exhaustive.mode = triangles::SearchMode::Exhaustive;
  std::size_t cpRuns = 0, cpOk = 0, feRuns = 0, feOk = 0;
  for (std::size_t run = 0; run < kRuns; ++run) {
    const std::size_t n = run % 2 == 0 ? 16 : 81;
    Rng rng(90000 + run);
    const auto g = instances::planted_triangles(n, 8, kDensity, n / 4, rng);
    const PairSet s = PairSet::all_pairs(n);
    const PairSet truth = oracles::brute_find_edges(g, s);

    Network net(n, NetMode::Strict);
    Rng cpRng = rng.substream("compute-pairs");
    const auto r = triangles::compute_pairs(net, g, s, cpRng, exhaustive);
    if (!r.aborted) {
      ++cpRuns;
      cpOk += r.pairs == truth ? 1 : 0;
    }

    Network feNet(n, NetMode::Strict);
    bool aborted = false;
    reductions::PromiseSolver solver = [&](const reductions::PromiseCall& call, Rng& inner) {
      auto out = triangles::compute_pairs(feNet, call.sides, call.s, inner, exhaustive, false, &call.pairs);
      aborted = aborted || out.aborted;
      return reductions::PromiseOutcome{out.pairs, out.aborted};
    };
    Rng feRng = rng.substream("find-edges");
    const auto fe = reductions::find_edges(g, s, solver, feRng);
    if (!aborted) {
      ++feRuns;
      feOk += fe.pairs == truth ? 1 : 0;
    }
  }
  const bool pass = cpRuns > 0 && feRuns > 0 && cpOk == cpRuns && feOk == feRuns;
  report(3, "pipeline isolation", pass,
         fmt("compute_pairs %.0f/%.0f, find_edges %.0f/%.0f non-aborted runs exact", static_cast<double>(cpOk),
             static_cast<double>(cpRuns), static_cast<double>(feOk), static_cast<double>(feRuns)));
}

void criterion4() {
  double worst = 0.0;
  std::size_t cases = 0;
  for (std::size_t x = 1; x + 1 <= kGroverMaxExtended; ++x)
    for (std::size_t a = 0; 2 * a <= x; ++a) {
      std::vector<bool> bits(x, false);
      std::fill_n(bits.begin(), a, true);
      const auto g = qsearch::dummy_extend(qsearch::TruthTable(bits));
      const double theta = std::asin(std::sqrt(static_cast<double>(a + 1) / static_cast<double>(x + 1)));
      const auto kMax = static_cast<std::size_t>(std::floor(2.0 * std::sqrt(static_cast<double>(x))));
      for (std::size_t k = 0; k <= kMax; ++k) {
        const double simulated = qsearch::grover_state(g, k).success_probability(g);
        const double s = std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
        worst = std::max(worst, std::abs(simulated - s * s));
        ++cases;
      }
    }
  // |X u {bot}| = 4 with bot the only solution.
  const auto four = qsearch::dummy_extend(qsearch::TruthTable(std::vector<bool>(3, false)));
  const double one = qsearch::grover_state(four, 1).success_probability(four);
  report(4, "Grover exactness", worst <= kGroverTolerance && std::abs(one - 1.0) <= kGroverTolerance,
         fmt("%.0f cases, max |sim - sin^2| = %.3g, single-solution N=4 at k=1: %.12f", static_cast<double>(cases),
             worst, one));
}

void criterion5() {
  std::string detail;
  bool pass = true;
  const std::pair<std::size_t, std::size_t> cases[] = {{9, 90}, {16, 200}, {25, 400}};
  for (const auto& [x, m] : cases) {
    Rng rng = Rng(5).substream("projection", {x, m});
    const auto suite = cli::projection_suite(x, m, kProjectionPatterns, rng);
    std::size_t ok = 0;
    double worst = 0.0;
    for (const auto& c : suite) {
      ok += c.pass() ? 1 : 0;
      worst = std::max(worst, c.check.upperEstimate / c.check.bound);
    }
    pass = pass && ok == kProjectionPatterns;
    detail += fmt("(|X|=%.0f, m=%.0f) %.0f/50, max estimate/bound %.3g; ", static_cast<double>(x),
                  static_cast<double>(m), static_cast<double>(ok), worst);
  }
  report(5, "typical projection bound", pass, detail + "Monte-Carlo within 3 sigma required");
}

void criterion6() {
  std::size_t accepted = 0, deltaCap = 0, bridgeFailures = 0;
  std::uint64_t violations = 0;
  for (const RunAudit& a : audits) {
    if (a.aborted || a.error) continue;
    ++accepted;
    deltaCap += a.deltaCapCalls;
    bridgeFailures += a.bridgeFailures;
    violations += a.typicalityViolations;
  }
  report(6, "solution typicality", accepted > 0 && deltaCap > 0 && bridgeFailures == 0 && violations == 0,
         fmt("%.0f accepted runs, %.0f promise calls with the delta-cap audit passing, %.0f frequency failures, "
             "%.0f typicality violations",
             static_cast<double>(accepted), static_cast<double>(deltaCap), static_cast<double>(bridgeFailures),
             static_cast<double>(violations)));
}

void criterion7() {
  // One heavy instance at n = 256 exercises the higher classes.
  {
    const std::size_t n = kAuditN;
    const auto g = instances::planted_heavy_triple(n, 4 * n, static_cast<std::uint32_t>(2 * LabelSchemes(n).q()));
    Network net(n, NetMode::Strict);
    Rng rng(77);
    try {
      const auto r = triangles::compute_pairs(net, g, PairSet::all_pairs(n), rng);
      record(n, r, net);
    } catch (const BandwidthViolation&) {
      RunAudit a;
      a.host = n;
      a.error = true;
      a.bandwidthViolations = 1;
      audits.push_back(a);
    }
  }
  std::set<std::size_t> hosts;
  std::size_t accepted = 0, bandwidth = 0;
  double evalRatio = 0.0, groverRatio = 0.0;
  for (const RunAudit& a : audits) {
    bandwidth += a.bandwidthViolations;
    if (a.aborted || a.error) continue;
    ++accepted;
    hosts.insert(a.host);
    const double ln = std::log(static_cast<double>(a.host));
    evalRatio = std::max(evalRatio, static_cast<double>(a.maxEvalRounds) / (ln * ln));
    groverRatio = std::max(groverRatio, static_cast<double>(a.maxGroverPerClass) /
                                            (std::pow(static_cast<double>(a.host), 0.25) * ln));
  }
  const bool allSizes = hosts.contains(16) && hosts.contains(81) && hosts.contains(256);
  report(7, "load balance and ledger",
         accepted > 0 && allSizes && bandwidth == 0 && evalRatio <= kEvalConstant && groverRatio <= kGroverConstant,
         fmt("%.0f accepted runs on n in {16, 81, 256}, %.0f bandwidth violations, max eval/(ln n)^2 = %.2f "
             "(c = 40), max iterations per class/(n^(1/4) ln n) = %.2f (c' = 80)",
             static_cast<double>(accepted), static_cast<double>(bandwidth), evalRatio, groverRatio));
}

void criterion8() {
  cli::RunConfig c;
  c.n = kAuditN;
  c.trials = kRuns;
  c.seed = 8;
  c.checks = {"cover", "class-bounds", "domain-cap"};
  const cli::Report rep = cli::verify_lemmas(c);
  std::size_t cover = 0, classes = 0, domainOk = 0, domainRuns = 0;
  for (const auto& check : rep.json.at("checks")) {
    const auto name = check.at("name").get<std::string>();
    const auto passes = check.at("passes").get<std::size_t>();
    if (name == "cover") cover = passes;
    if (name == "class-bounds") classes = passes;
    if (name == "domain-cap") {
      domainOk = passes;
      domainRuns = check.at("qualifying").get<std::size_t>();
    }
  }
  const bool pass = static_cast<double>(cover) >= kCoverRate * kRuns &&
                    static_cast<double>(classes) >= kClassRate * kRuns && domainRuns > 0 && domainOk == domainRuns;
  report(8, "cover and class audits at n=256", pass,
         fmt("cover+balance %.0f/100 (need 90), class bounds %.0f/100 (need 95), domain cap %.0f/%.0f", cover,
             classes, domainOk, domainRuns));
}

void criterion9() {
  std::size_t runs = 0, qualifying = 0, exact = 0, overBound = 0;
  for (std::size_t n : {4u, 8u})
    for (std::size_t run = 0; run < kProductRuns; ++run) {
      Rng rng(9000 + 100 * n + run);
      const auto a = instances::random_matrix(n, 8, 0.2, rng);
      const auto b = instances::random_matrix(n, 8, 0.2, rng);
      const std::size_t host = next_fourth_power(3 * n);
      cli::RunConfig config;
      config.net = NetMode::Strict;
      cli::TriangleEngine engine(host, config);
      bool allSucceeded = true;
      std::uint64_t call = 0;
      reductions::FindEdgesFn fe = [&](const UndirectedWeightedGraph& g, const PairSet& s) {
        Rng inner = rng.substream("find-edges", {call++});
        auto r = reductions::find_edges(g, s, engine.solver(), inner);
        allSucceeded = allSucceeded && r.aborts == 0 && r.pairs == oracles::brute_find_edges(g, s);
        return r;
      };
      const auto r = reductions::distance_product_via_triangles(a, b, fe, host);
      ++runs;
      overBound += r.calls > r.callBound ? 1 : 0;
      if (!allSucceeded) continue;
      ++qualifying;
      exact += r.product == min_plus_product_oracle(a, b) ? 1 : 0;
    }
  report(9, "distance product reduction", qualifying > 0 && exact == qualifying && overBound == 0,
         fmt("%.0f/%.0f runs with every FindEdges call correct, %.0f of them exact, %.0f over the call bound",
             static_cast<double>(qualifying), static_cast<double>(runs), static_cast<double>(exact),
             static_cast<double>(overBound)));
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  const auto run = [&](int id) { return wanted.empty() || wanted.contains(id); };
  // 6 and 7 audit the runs of 1 and 2.
  if (run(1) || run(6) || run(7)) criterion1();
  if (run(2) || run(6) || run(7)) criterion2();
  if (run(3)) criterion3();
  if (run(4)) criterion4();
  if (run(5)) criterion5();
  if (run(6)) criterion6();
  if (run(7)) criterion7();
  if (run(8)) criterion8();
  if (run(9)) criterion9();
  return failures == 0 ? 0 : 1;
}
