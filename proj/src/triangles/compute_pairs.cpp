#include <algorithm>
#include <cmath>
#include <map>

#include "qclique/triangles.hpp"

namespace qclique::triangles {

namespace {

// One multi-search: the retained pairs of helper node (U, V, x) against the
// W blocks of one class.
struct Instance {
  NodeId helper;
  std::uint32_t u, v;
  const std::vector<std::uint32_t>* list;
  const std::vector<std::uint32_t>* domain;
};

std::uint64_t project(std::uint64_t mask, const std::vector<std::uint32_t>& domain) {
  std::uint64_t key = 0;
  for (std::size_t j = 0; j < domain.size(); ++j) key |= ((mask >> domain[j]) & 1U) << j;
  return key;
}

std::vector<qsearch::SearchGroup> make_groups(const TriangleIndex& index, const std::vector<std::uint32_t>& list,
                                              const std::vector<std::uint32_t>& domain) {
  std::map<std::uint64_t, std::vector<std::uint32_t>> byKey;
  for (std::uint32_t i = 0; i < list.size(); ++i) byKey[project(index.mask[list[i]], domain)].push_back(i);
  std::vector<qsearch::SearchGroup> groups;
  for (auto& [key, members] : byKey) {
    std::vector<bool> bits(domain.size());
    for (std::size_t j = 0; j < domain.size(); ++j) bits[j] = (key >> j) & 1U;
    groups.push_back({qsearch::TruthTable(std::move(bits)), std::move(members)});
  }
  return groups;
}

struct Context {
  Network& net;
  const LabelSchemes& schemes;
  const TriangleIndex& index;
  const PaperConstants& k;
  SearchMode mode;
  std::vector<std::uint64_t> gatheredUnits;  // per triple node
};

// Searches of one class. Adds found pairs to `found` and returns the report.
AlphaReport run_class(Context& ctx, const LambdaCover& cover, const ClassPartition& classes, int alpha,
                      std::vector<char>& found, Rng& rng) {
  const LabelSchemes& schemes = ctx.schemes;
  const std::size_t n = schemes.n();
  const std::size_t q = schemes.q();
  const double ln = log_n(n);
  const double sqrtN = std::sqrt(static_cast<double>(n));
  const double scale = std::ldexp(1.0, alpha);

  AlphaReport rep;
  rep.alpha = alpha;
  rep.beta = ctx.k.evalPromise * scale * sqrtN * ln;
  rep.domainCap = ctx.k.alphaSublist * sqrtN * ln / scale;
  const std::size_t logicalM = static_cast<std::size_t>(std::ceil(ctx.k.pairsPerNode * static_cast<double>(n) * ln));

  std::vector<std::vector<std::uint32_t>> domains(q * q);
  std::vector<BlockTriple> triples;
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V) {
      domains[U * q + V] = classes.members(schemes, U, V, alpha);
      for (std::uint32_t W : domains[U * q + V]) triples.push_back({U, V, W});
      const std::size_t size = domains[U * q + V].size();
      rep.maxDomain = std::max(rep.maxDomain, size);
      if (static_cast<double>(size) > rep.domainCap) rep.domainCapHolds = false;
    }
  rep.triples = triples.size();
  if (triples.empty()) return rep;

  std::optional<AlphaScheme> scheme;
  if (alpha > 0) {
    rep.sublists = alpha_sublist_count(alpha, n, ctx.k.alphaSublist);
    try {
      scheme.emplace(n, triples, rep.sublists);
    } catch (const LabelError&) {
      rep.sublists = std::max<std::size_t>(1, n / triples.size());
      scheme.emplace(n, triples, rep.sublists);
    }
    // Duplication: every class node copies what its triple gathered.
    LoadMatrix dup(n);
    for (const BlockTriple& t : triples)
      for (std::size_t y = 0; y < rep.sublists; ++y)
        dup.add(schemes.triple_node(t), scheme->node(t, y), ctx.gatheredUnits[schemes.triple_node(t)]);
    rep.setupRounds = ctx.net.route_loads("alpha-" + std::to_string(alpha) + "/setup", dup);
  }

  // Ensembles. Under a full cover every helper of (U, V) holds the same list,
  // so the groups are built once per block pair.
  std::vector<Instance> instances;
  std::vector<qsearch::SearchEnsemble> ensembles;
  for (std::uint32_t U = 0; U < q; ++U)
    for (std::uint32_t V = U; V < q; ++V) {
      const auto& domain = domains[U * q + V];
      if (domain.empty()) continue;
      std::vector<qsearch::SearchGroup> shared;
      if (cover.full) shared = make_groups(ctx.index, ctx.index.byBlocks[U * q + V], domain);
      for (std::uint32_t x = 0; x < schemes.fine_count(); ++x) {
        const NodeId h = schemes.helper_node(U, V, x);
        const auto& list = cover.list(ctx.index, schemes, h);
        if (list.empty()) continue;
        instances.push_back({h, U, V, &list, &domain});
        ensembles.push_back(qsearch::SearchEnsemble::from_groups(
            domain.size(), cover.full ? shared : make_groups(ctx.index, list, domain)));
      }
    }
  rep.instances = ensembles.size();

  for (const auto& ens : ensembles) {
    rep.coordinates += ens.m();
    const auto hyp = qsearch::typicality_hypotheses(ens, logicalM, rep.beta, ctx.k.typicalDomain, ctx.k.typicalBeta);
    rep.maxSolutionFrequency = std::max(rep.maxSolutionFrequency, hyp.maxSolutionFrequency);
    rep.frequencyBridge = rep.frequencyBridge && hyp.solutionFrequency;
    rep.domainBoundLn = rep.domainBoundLn && hyp.domainBoundLn;
    rep.domainBoundLog2 = rep.domainBoundLog2 && hyp.domainBoundLog2;
    rep.betaBound = rep.betaBound && hyp.betaBound;
  }

  const std::string evalPhase = "alpha-" + std::to_string(alpha) + "/eval";
  auto evaluate = [&](const std::vector<std::vector<std::uint64_t>>& hist) {
    qsearch::StepCost cost;
    cost.errored.assign(hist.size(), false);
    LoadMatrix queries(n), replies(n);
    for (std::size_t e = 0; e < hist.size(); ++e) {
      const Instance& inst = instances[e];
      for (std::size_t j = 0; j < hist[e].size(); ++j) {
        const std::uint64_t c = hist[e][j];
        if (c == 0) continue;
        if (static_cast<double>(c) > rep.beta) {
          cost.errored[e] = true;
          ++rep.promiseViolations;
        }
        const BlockTriple t{inst.u, inst.v, (*inst.domain)[j]};
        if (!scheme) {
          queries.add(inst.helper, schemes.triple_node(t), c);
          replies.add(schemes.triple_node(t), inst.helper, c);
          continue;
        }
        const std::size_t s = rep.sublists;
        for (std::size_t y = 0; y < s && y < c; ++y) {
          const std::uint64_t part = c / s + (y < c % s ? 1 : 0);
          queries.add(inst.helper, scheme->node(t, y), part);
          replies.add(scheme->node(t, y), inst.helper, part);
        }
      }
    }
    cost.rounds = ctx.net.route_loads(evalPhase, queries) + ctx.net.route_loads(evalPhase, replies);
    ++rep.evalCalls;
    rep.maxEvalRounds = std::max(rep.maxEvalRounds, cost.rounds);
    return cost;
  };

  if (ctx.mode == SearchMode::Exhaustive) {
    // Every coordinate queries every block of the class once.
    std::vector<std::vector<std::uint64_t>> hist(ensembles.size());
    for (std::size_t e = 0; e < ensembles.size(); ++e) hist[e].assign(instances[e].domain->size(), ensembles[e].m());
    evaluate(hist);
    for (const Instance& inst : instances)
      for (std::uint32_t id : *inst.list)
        if (project(ctx.index.mask[id], *inst.domain) != 0) found[id] = 1;
    return rep;
  }

  qsearch::LockstepOptions opts;
  opts.logicalM = logicalM;
  opts.beta = rep.beta;
  const auto run = qsearch::run_lockstep(ensembles, opts, evaluate, rng);
  rep.search = run.stats;
  ctx.net.charge("alpha-" + std::to_string(alpha) + "/grover", MessageKind::QuantumCharged,
                 run.stats.quantumChargedRounds);
  for (std::size_t e = 0; e < ensembles.size(); ++e)
    for (std::size_t i = 0; i < run.found[e].size(); ++i)
      if (run.found[e][i]) found[(*instances[e].list)[i]] = 1;
  return rep;
}

}  // namespace

ComputePairsResult compute_pairs(Network& net, const UndirectedWeightedGraph& g, const PairSet& s, Rng& rng,
                                 const ComputePairsOptions& options, bool keepCover,
                                 const UndirectedWeightedGraph* pairWeights) {
  const std::size_t n = net.size();
  if (g.vertex_count() > n) throw std::invalid_argument("network smaller than the graph");
  const LabelSchemes schemes(n);
  const UndirectedWeightedGraph gp = g.vertex_count() == n ? g : g.padded_to(n);
  PairSet sp(n);
  for (const VertexPair& p : s) sp.insert(p);
  const TriangleIndex index = TriangleIndex::build(gp, sp, schemes, pairWeights);
  const PaperConstants& k = options.constants;
  const std::size_t q = schemes.q();
  const double ln = log_n(n);

  ComputePairsResult res;
  res.pairs = PairSet(g.vertex_count());
  ComputePairsAudit& audit = res.audit;
  for (std::uint32_t gm : index.gamma) audit.maxGamma = std::max<std::size_t>(audit.maxGamma, gm);
  audit.promiseHolds = static_cast<double>(audit.maxGamma) <= k.promise * ln;

  res.deltaSizes = delta_sizes(index, schemes);

  // Gathering: node (U, V, W) loads f(u, w) for u in U and f(w, v) for v in V.
  Context ctx{net, schemes, index, k, options.mode, std::vector<std::uint64_t>(n, 0)};
  {
    std::vector<std::uint32_t> toFine(n * schemes.fine_count(), 0);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        if (a != b && gp.has_edge(a, b)) ++toFine[a * schemes.fine_count() + schemes.fine_of(b)];
    LoadMatrix gather(n);
    for (std::uint32_t U = 0; U < q; ++U)
      for (std::uint32_t V = U; V < q; ++V)
        for (std::uint32_t W = 0; W < schemes.fine_count(); ++W) {
          const NodeId t = schemes.triple_node({U, V, W});
          for (std::uint32_t side : {U, V}) {
            if (side == V && U == V) break;
            for (std::size_t a = 0; a < schemes.coarse_size(); ++a) {
              const Vertex u = static_cast<Vertex>(schemes.coarse_begin(side) + a);
              const std::uint32_t units = toFine[u * schemes.fine_count() + W];
              gather.add(u, t, units);
              ctx.gatheredUnits[t] += units;
            }
          }
        }
    net.route_loads("gather", gather);
  }

  for (std::size_t attempt = 0; attempt < std::max<std::size_t>(1, options.retryBound); ++attempt) {
    res.attempts = attempt + 1;
    Rng arng = rng.substream("compute-pairs-attempt", {attempt});
    Rng coverRng = arng.substream("cover");
    auto cover = build_lambda_cover(net, schemes, index, k, coverRng, &res.abortReason);
    if (!cover) {
      audit.wellBalanced = false;
      continue;
    }
    Rng classRng = arng.substream("classes");
    auto classes = identify_class(net, schemes, index, k, classRng, &res.abortReason);
    if (!classes) continue;

    audit.wellBalanced = cover->wellBalanced;
    audit.coverComplete = cover->complete;
    res.abortReason.clear();
    res.classes = *classes;

    audit.classBounds = class_bounds_hold(*classes, res.deltaSizes, schemes);
    audit.deltaCap = delta_cap_holds(index, schemes, *cover, *classes, k);

    std::vector<char> found(index.pairs.size(), 0);
    for (int alpha = 0; alpha <= classes->maxClass; ++alpha) {
      Rng searchRng = arng.substream("search", {static_cast<std::uint64_t>(alpha)});
      AlphaReport rep = run_class(ctx, *cover, *classes, alpha, found, searchRng);
      audit.domainCap = audit.domainCap && rep.domainCapHolds;
      audit.frequencyBridge = audit.frequencyBridge && rep.frequencyBridge;
      audit.typicalityViolations += rep.search.typicalityViolations;
      audit.promiseViolations += rep.promiseViolations;
      audit.maxEvalRounds = std::max(audit.maxEvalRounds, rep.maxEvalRounds);
      audit.maxGroverIterationsPerClass = std::max(audit.maxGroverIterationsPerClass, rep.search.groverIterations);
      audit.maxIterationsPerPass = std::max(audit.maxIterationsPerPass, rep.search.maxIterationsPerPass);
      res.alphas.push_back(std::move(rep));
    }
    for (std::size_t id = 0; id < found.size(); ++id)
      if (found[id]) res.pairs.insert(index.pairs[id]);
    if (keepCover) res.cover = std::move(cover);
    return res;
  }
  res.aborted = true;
  return res;
}

}  // namespace qclique::triangles
