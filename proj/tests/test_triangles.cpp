#include <doctest.h>

#include "qclique/instances.hpp"
#include "qclique/oracles.hpp"
#include "qclique/triangles.hpp"

using namespace qclique;
using namespace qclique::triangles;

namespace {

// Block W = {4..7} of n = 16; u = 0 (coarse 0), v = 8 (coarse 1).
UndirectedWeightedGraph three_vertex_graph(std::int64_t fuv, std::int64_t fuw, std::int64_t fwv) {
  UndirectedWeightedGraph g(16);
  g.set_edge(0, 8, fuv);
  g.set_edge(0, 5, fuw);
  g.set_edge(5, 8, fwv);
  return g;
}

bool predicate_on(const UndirectedWeightedGraph& g, Vertex u, Vertex v, std::uint32_t w) {
  const LabelSchemes schemes(g.vertex_count());
  const GatheredWeights gathered(g, schemes, {schemes.coarse_of(u), schemes.coarse_of(v), w});
  return negative_triangle_predicate(u, v, g.weight(u, v), gathered);
}

ComputePairsResult run(const UndirectedWeightedGraph& g, const PairSet& s, std::uint64_t seed,
                       const ComputePairsOptions& opts = {}) {
  Network net(next_fourth_power(g.vertex_count()));
  Rng rng(seed);
  return compute_pairs(net, g, s, rng, opts);
}

}  // namespace

TEST_CASE("predicate: worked examples") {
  CHECK(predicate_on(three_vertex_graph(-5, 1, 2), 0, 8, 1));
  // Sum exactly zero is not negative.
  CHECK_FALSE(predicate_on(three_vertex_graph(-3, 1, 2), 0, 8, 1));
  // Block without incident edges.
  CHECK_FALSE(predicate_on(three_vertex_graph(-5, 1, 2), 0, 8, 3));
  UndirectedWeightedGraph g(16);
  g.set_edge(0, 5, -4);
  g.set_edge(5, 8, -4);
  CHECK_FALSE(predicate_on(g, 0, 8, 1));  // {0, 8} is not an edge
}

TEST_CASE("predicate: lookups outside the gathered blocks") {
  const auto g = three_vertex_graph(-5, 1, 2);
  const LabelSchemes schemes(16);
  const GatheredWeights gathered(g, schemes, {0, 1, 1});
  CHECK_NOTHROW(gathered.uw(0, 5));
  CHECK_THROWS_AS(gathered.uw(8, 5), ConsistencyError);
  CHECK_THROWS_AS(gathered.uw(0, 9), ConsistencyError);
  CHECK_THROWS_AS(gathered.wv(5, 0), ConsistencyError);
}

TEST_CASE("index masks agree with the predicate and with the oracles") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = seed < 3 ? 16 : 81;
    Rng rng(seed);
    const auto g = instances::planted_triangles(n, 6, 0.4, 6, rng);
    const PairSet s = PairSet::all_pairs(n);
    const LabelSchemes schemes(n);
    const auto index = TriangleIndex::build(g, s, schemes);
    REQUIRE(index.pairs.size() == s.size());
    for (std::size_t id = 0; id < index.pairs.size(); ++id) {
      const VertexPair p = index.pairs[id];
      CHECK(index.gamma[id] == oracles::gamma_count(g, p.lo, p.hi));
      for (std::uint32_t w = 0; w < schemes.fine_count(); ++w)
        CHECK(((index.mask[id] >> w) & 1U) == predicate_on(g, p.lo, p.hi, w));
    }
    const std::size_t q = schemes.q();
    for (std::uint32_t U = 0; U < q; ++U)
      for (std::uint32_t V = U; V < q; ++V)
        for (std::uint32_t W = 0; W < schemes.fine_count(); ++W) {
          const auto d = oracles::delta_set(g, s, schemes.coarse_members(U), schemes.coarse_members(V),
                                            schemes.fine_members(W));
          CHECK(index.delta_size(U, V, W) == d.size());
        }
  }
}

TEST_CASE("lambda cover: clamped to probability 1") {
  const std::size_t n = 81;
  Rng rng(1);
  const auto g = instances::planted_triangles(n, 5, 0.3, 4, rng);
  const LabelSchemes schemes(n);
  const auto index = TriangleIndex::build(g, PairSet::all_pairs(n), schemes);
  Network net(n);
  auto cover = build_lambda_cover(net, schemes, index, PaperConstants{}, rng);
  REQUIRE(cover);
  CHECK(cover->probability == 1.0);
  CHECK(cover->full);
  CHECK(cover->complete);
  CHECK(cover->wellBalanced);
  CHECK(cover->maxPerVertex == schemes.coarse_size());
  const NodeId h = schemes.helper_node(0, 1, 3);
  CHECK(cover->list(index, schemes, h).size() == schemes.coarse_size() * schemes.coarse_size());
  CHECK(net.ledger().find("lambda-cover") != nullptr);
}

TEST_CASE("lambda cover: forced probability 0") {
  const std::size_t n = 16;
  Rng rng(2);
  const LabelSchemes schemes(n);
  const auto index = TriangleIndex::build(UndirectedWeightedGraph(n), PairSet::all_pairs(n), schemes);
  PaperConstants k;
  k.lambdaSampling = 0;
  Network net(n);
  auto cover = build_lambda_cover(net, schemes, index, k, rng);
  REQUIRE(cover);
  CHECK_FALSE(cover->full);
  CHECK_FALSE(cover->complete);
  CHECK(cover->maxPerVertex == 0);
  for (NodeId h = 0; h < n; ++h) CHECK(cover->list(index, schemes, h).empty());
}

TEST_CASE("lambda cover: sampled sets keep exactly the S pairs") {
  const std::size_t n = 256;
  const LabelSchemes schemes(n);
  PairSet s(n);
  Rng pick(3);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (pick.bernoulli(0.5)) s.insert(a, b);
  const auto index = TriangleIndex::build(UndirectedWeightedGraph(n), s, schemes);
  PaperConstants k;
  k.lambdaSampling = 2.0;  // p = 2 ln n / 16
  Rng rng(4);
  Network net(n);
  auto cover = build_lambda_cover(net, schemes, index, k, rng);
  REQUIRE(cover);
  CHECK_FALSE(cover->full);
  std::size_t total = 0;
  for (NodeId h = 0; h < n; ++h) {
    std::uint32_t U, V, x;
    schemes.helper_of(h, U, V, x);
    for (std::uint32_t id : cover->list(index, schemes, h)) {
      const VertexPair p = index.pairs[id];
      CHECK(s.contains(p));
      CHECK(schemes.coarse_of(p.lo) == U);
      CHECK(schemes.coarse_of(p.hi) == V);
    }
    total += cover->list(index, schemes, h).size();
  }
  // Each S pair lands in each of its 16 helpers with probability p.
  const double expected = static_cast<double>(s.size()) * 2 * std::log(256.0);
  CHECK(static_cast<double>(total) == doctest::Approx(expected).epsilon(0.05));
  CHECK(cover->complete);
  CHECK(cover->wellBalanced);
}

TEST_CASE("identify_class: no negative triangles gives class 0 everywhere") {
  const std::size_t n = 81;
  Rng rng(5);
  const auto g = instances::planted_triangles(n, 5, 0.5, 0, rng);
  const LabelSchemes schemes(n);
  const auto index = TriangleIndex::build(g, PairSet::all_pairs(n), schemes);
  Network net(n);
  auto part = identify_class(net, schemes, index, PaperConstants{}, rng);
  REQUIRE(part);
  CHECK(part->maxClass == 0);
  for (std::size_t t = 0; t < n; ++t) {
    CHECK(part->d[t] == 0);
    CHECK(part->c[t] == 0);
  }
}

TEST_CASE("identify_class: class thresholds and abort") {
  const std::size_t n = 256;
  const auto g = instances::planted_heavy_triple(n, 4 * n, 9);
  const LabelSchemes schemes(n);
  const auto index = TriangleIndex::build(g, PairSet::all_pairs(n), schemes);
  const NodeId heavy = schemes.triple_node({0, 1, 9});
  CHECK(index.delta_size(0, 1, 9) == 4 * n);
  const double ln = std::log(256.0);
  Rng rng(6);
  Network net(n);
  auto part = identify_class(net, schemes, index, PaperConstants{}, rng);
  REQUIRE(part);
  const int c = part->c[heavy];
  CHECK(static_cast<double>(part->d[heavy]) < 10 * std::ldexp(1.0, c) * ln);
  if (c > 0) CHECK(static_cast<double>(part->d[heavy]) >= 10 * std::ldexp(1.0, c - 1) * ln);
  CHECK(part->members(schemes, 0, 1, c).size() >= 1);

  PaperConstants tight;
  tight.identifyAbort = 0;
  std::string reason;
  Network net2(n);
  CHECK_FALSE(identify_class(net2, schemes, index, tight, rng, &reason));
  CHECK_FALSE(reason.empty());
}

TEST_CASE("identify_class: planted heavy triple lands in a class within the size bounds") {
  const std::size_t n = 256;
  const auto g = instances::planted_heavy_triple(n, 4 * n, 9);
  const LabelSchemes schemes(n);
  const auto index = TriangleIndex::build(g, PairSet::all_pairs(n), schemes);
  const NodeId heavy = schemes.triple_node({0, 1, 9});
  int within = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    Network net(n);
    auto part = identify_class(net, schemes, index, PaperConstants{}, rng);
    REQUIRE(part);
    const int c = part->c[heavy];
    const double delta = 4.0 * n;
    if (c > 0 && std::ldexp(1.0 * n, c - 3) <= delta && delta <= std::ldexp(1.0 * n, c + 1)) ++within;
  }
  CHECK(within >= 95);
}

TEST_CASE("audits: class bounds, domain cap and delta cap") {
  CHECK(class_within_bounds(0, 32, 16));
  CHECK_FALSE(class_within_bounds(0, 33, 16));
  CHECK(class_within_bounds(2, 8, 16));
  CHECK(class_within_bounds(2, 128, 16));
  CHECK_FALSE(class_within_bounds(2, 7, 16));
  CHECK_FALSE(class_within_bounds(2, 129, 16));

  const std::size_t n = 256;
  const auto g = instances::planted_heavy_triple(n, 4 * n, 9);
  const LabelSchemes schemes(n);
  const auto index = TriangleIndex::build(g, PairSet::all_pairs(n), schemes);
  const auto deltas = delta_sizes(index, schemes);
  CHECK(deltas[schemes.triple_node({0, 1, 9})] == 4 * n);
  CHECK(deltas[schemes.triple_node({1, 0, 9})] == 0);

  Rng rng(3);
  Network net(n);
  const auto cover = build_lambda_cover(net, schemes, index, PaperConstants{}, rng);
  const auto classes = identify_class(net, schemes, index, PaperConstants{}, rng);
  REQUIRE(cover);
  REQUIRE(classes);
  REQUIRE(class_bounds_hold(*classes, deltas, schemes));
  const int heavy = classes->c[schemes.triple_node({0, 1, 9})];
  CHECK(max_class_domain(*classes, schemes, heavy) == 1);
  CHECK(max_class_domain(*classes, schemes, 0) == schemes.fine_count());
  CHECK(domain_cap_holds(*classes, schemes, PaperConstants{}));
  CHECK(delta_cap_holds(index, schemes, *cover, *classes, PaperConstants{}));

  PaperConstants tight;
  tight.alphaSublist = 1e-4;
  tight.deltaCap = 0.01;
  CHECK_FALSE(domain_cap_holds(*classes, schemes, tight));
  CHECK_FALSE(delta_cap_holds(index, schemes, *cover, *classes, tight));
}

TEST_CASE("compute_pairs: trivial inputs") {
  const std::size_t n = 16;
  Rng rng(7);
  const auto positive = instances::planted_triangles(n, 5, 0.6, 0, rng);
  auto r = run(positive, PairSet::all_pairs(n), 1);
  CHECK_FALSE(r.aborted);
  CHECK(r.pairs.empty());

  const auto planted = instances::planted_triangles(n, 5, 0.6, 3, rng);
  auto e = run(planted, PairSet(n), 2);
  CHECK_FALSE(e.aborted);
  CHECK(e.pairs.empty());
}

TEST_CASE("compute_pairs: exhaustive search is exact") {
  ComputePairsOptions opts;
  opts.mode = SearchMode::Exhaustive;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = seed % 2 == 0 ? 16 : 70;
    Rng rng(seed);
    const auto g = instances::planted_triangles(n, 8, 0.5, 5, rng);
    PairSet s(n);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng.bernoulli(0.7)) s.insert(a, b);
    const auto r = run(g, s, seed, opts);
    REQUIRE_FALSE(r.aborted);
    CHECK(r.pairs == oracles::brute_find_edges(g, s));
  }
}

TEST_CASE("compute_pairs: simulated search matches brute force at n = 16") {
  int matches = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(1000 + seed);
    const auto g = instances::planted_triangles(16, 6, 0.5, 3, rng);
    const PairSet s = PairSet::all_pairs(16);
    const auto r = run(g, s, seed);
    if (!r.aborted && r.pairs == oracles::brute_find_edges(g, s)) ++matches;
  }
  CHECK(matches >= 95);
}

TEST_CASE("compute_pairs: output is always a subset of the true pairs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Rng rng(seed);
    const auto g = instances::planted_triangles(81, 6, 0.4, 8, rng);
    const PairSet s = PairSet::all_pairs(81);
    const auto r = run(g, s, seed);
    const auto truth = oracles::brute_find_edges(g, s);
    for (const VertexPair& p : r.pairs) CHECK(truth.contains(p));
    CHECK(r.audit.promiseHolds);
    CHECK(r.audit.coverComplete);
    CHECK(r.audit.domainCap);
    CHECK(r.audit.frequencyBridge);
    CHECK(r.audit.typicalityViolations == 0);
  }
}

TEST_CASE("compute_pairs: evaluation promise violations error out") {
  Rng rng(8);
  const auto g = instances::planted_triangles(16, 6, 0.5, 3, rng);
  const PairSet s = PairSet::all_pairs(16);
  ComputePairsOptions opts;
  opts.constants.evalPromise = 1e-9;
  const auto r = run(g, s, 3, opts);
  REQUIRE_FALSE(r.aborted);
  CHECK(r.audit.promiseViolations > 0);
  CHECK(r.pairs.empty());
  CHECK_FALSE(oracles::brute_find_edges(g, s).empty());
}

TEST_CASE("compute_pairs: charges every phase and is reproducible") {
  Rng rng(9);
  const auto g = instances::planted_triangles(81, 6, 0.4, 6, rng);
  const PairSet s = PairSet::all_pairs(81);
  Network a(81), b(81);
  Rng ra(11), rb(11);
  const auto x = compute_pairs(a, g, s, ra);
  const auto y = compute_pairs(b, g, s, rb);
  CHECK(to_json(x).dump() == to_json(y).dump());
  CHECK(a.ledger().to_json().dump() == b.ledger().to_json().dump());
  for (const char* phase : {"gather", "lambda-cover", "identify-class", "alpha-0/eval"})
    CHECK_MESSAGE(a.ledger().find(phase) != nullptr, phase);
  CHECK(a.ledger().find("alpha-0/grover")->quantumChargedRounds > 0);
}

TEST_CASE("compute_pairs: retries after an abort and reports exhaustion") {
  Rng rng(10);
  const auto g = instances::planted_triangles(16, 6, 0.5, 3, rng);
  ComputePairsOptions opts;
  opts.constants.wellBalanced = 0;
  opts.retryBound = 2;
  const auto r = run(g, PairSet::all_pairs(16), 4, opts);
  CHECK(r.aborted);
  CHECK(r.attempts == 2);
  CHECK(r.pairs.empty());
  CHECK_FALSE(r.abortReason.empty());
}
