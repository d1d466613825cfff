#include "qclique/triangles.hpp"

namespace qclique::triangles {

namespace {

nlohmann::json stats_json(const qsearch::LockstepStats& s) {
  return {{"passes", s.passes},
          {"steps", s.steps},
          {"pretestSteps", s.pretestSteps},
          {"groverIterations", s.groverIterations},
          {"maxIterationsPerPass", s.maxIterationsPerPass},
          {"classicalRounds", s.classicalRounds},
          {"quantumChargedRounds", s.quantumChargedRounds},
          {"maxStepRounds", s.maxStepRounds},
          {"typicalityViolations", s.typicalityViolations},
          {"erroredEvaluations", s.erroredEvaluations},
          {"maxObservedFrequency", s.maxObservedFrequency}};
}

}  // namespace

nlohmann::json to_json(const AlphaReport& r) {
  return {{"alpha", r.alpha},
          {"triples", r.triples},
          {"sublists", r.sublists},
          {"maxDomain", r.maxDomain},
          {"domainCap", r.domainCap},
          {"domainCapHolds", r.domainCapHolds},
          {"beta", r.beta},
          {"instances", r.instances},
          {"coordinates", r.coordinates},
          {"maxSolutionFrequency", r.maxSolutionFrequency},
          {"frequencyBridge", r.frequencyBridge},
          {"domainBoundLn", r.domainBoundLn},
          {"domainBoundLog2", r.domainBoundLog2},
          {"betaBound", r.betaBound},
          {"setupRounds", r.setupRounds},
          {"evalCalls", r.evalCalls},
          {"maxEvalRounds", r.maxEvalRounds},
          {"promiseViolations", r.promiseViolations},
          {"search", stats_json(r.search)}};
}

nlohmann::json to_json(const ComputePairsAudit& a) {
  return {{"maxGamma", a.maxGamma},
          {"promiseHolds", a.promiseHolds},
          {"coverComplete", a.coverComplete},
          {"wellBalanced", a.wellBalanced},
          {"deltaCap", a.deltaCap},
          {"classBounds", a.classBounds},
          {"domainCap", a.domainCap},
          {"frequencyBridge", a.frequencyBridge},
          {"typicalityViolations", a.typicalityViolations},
          {"promiseViolations", a.promiseViolations},
          {"maxEvalRounds", a.maxEvalRounds},
          {"maxGroverIterationsPerClass", a.maxGroverIterationsPerClass},
          {"maxIterationsPerPass", a.maxIterationsPerPass}};
}

nlohmann::json to_json(const ComputePairsResult& r) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const VertexPair& p : r.pairs) pairs.push_back({p.lo, p.hi});
  nlohmann::json alphas = nlohmann::json::array();
  for (const AlphaReport& a : r.alphas) alphas.push_back(to_json(a));
  nlohmann::json out{{"pairs", pairs},
                     {"aborted", r.aborted},
                     {"abortReason", r.abortReason},
                     {"attempts", r.attempts},
                     {"classes", alphas},
                     {"audit", to_json(r.audit)},
                     {"maxClass", r.classes.maxClass},
                     {"maxSampled", r.classes.maxSelected}};
  if (r.cover) {
    out["cover"] = {{"probability", r.cover->probability},
                    {"full", r.cover->full},
                    {"complete", r.cover->complete},
                    {"wellBalanced", r.cover->wellBalanced},
                    {"maxPerVertex", r.cover->maxPerVertex},
                    {"balanceBound", r.cover->balanceBound}};
  }
  return out;
}

}  // namespace qclique::triangles
