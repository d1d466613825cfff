#include <algorithm>
#include <cmath>
#include <map>

#include "qclique/qsearch.hpp"

namespace qclique::qsearch {

namespace {

// Pr[sum of independent Bernoulli(p_i) > threshold], by the O(m^2) recurrence.
double tail_above(const std::vector<double>& probs, double threshold) {
  std::vector<double> dist{1.0};
  for (double p : probs) {
    if (p == 0.0) continue;
    dist.push_back(0.0);
    for (std::size_t c = dist.size() - 1; c > 0; --c) dist[c] = dist[c] * (1.0 - p) + dist[c - 1] * p;
    dist[0] *= 1.0 - p;
  }
  double s = 0.0;
  for (std::size_t c = dist.size(); c-- > 0;) {
    if (static_cast<double>(c) <= threshold) break;
    s += dist[c];
  }
  return s;
}

}  // namespace

bool typical_membership(const std::vector<std::uint32_t>& tuple, double beta) {
  std::map<std::uint32_t, std::size_t> freq;
  for (std::uint32_t x : tuple)
    if (static_cast<double>(++freq[x]) > beta) return false;
  return true;
}

TypicalityReport typicality_hypotheses(const SearchEnsemble& ens, std::size_t m, double beta, double domainConstant,
                                       double betaConstant) {
  TypicalityReport r;
  r.m = m;
  r.domainSize = ens.domain_size();
  r.beta = beta;
  const double md = static_cast<double>(m);
  const double X = static_cast<double>(r.domainSize);
  if (m > 1) {
    r.domainBoundLn = X < md / (domainConstant * std::log(md));
    r.domainBoundLog2 = X < md / (domainConstant * std::log2(md));
  }
  r.betaBound = X > 0 && beta > betaConstant * md / X;
  r.maxSolutionFrequency = ens.max_solution_frequency();
  r.solutionFrequency = static_cast<double>(r.maxSolutionFrequency) <= beta / 2.0;
  return r;
}

TypicalSearchResult multi_search_typical(const SearchEnsemble& ens, double beta, const StepEvaluator& evaluate,
                                         Rng& rng) {
  TypicalSearchResult out;
  LockstepOptions opts;
  opts.beta = beta;
  out.run = run_lockstep({ens}, opts, evaluate, rng);
  out.report = typicality_hypotheses(ens, ens.m(), beta);
  out.report.typicalityViolations = out.run.stats.typicalityViolations;
  return out;
}

std::vector<std::vector<std::uint32_t>> select_sets(const std::vector<bool>& b,
                                                    const std::vector<std::vector<std::uint32_t>>& solutionSets,
                                                    std::size_t domainSize) {
  if (b.size() != solutionSets.size()) throw std::invalid_argument("bit pattern and family sizes differ");
  std::vector<std::vector<std::uint32_t>> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i]) {
      out[i] = solutionSets[i];
      continue;
    }
    std::vector<bool> in(domainSize, false);
    for (std::uint32_t x : solutionSets[i]) in.at(x) = true;
    for (std::uint32_t x = 0; x < domainSize; ++x)
      if (!in[x]) out[i].push_back(x);
  }
  return out;
}

ProjectionCheck projection_bound_check(const std::vector<std::vector<std::uint32_t>>& sets,
                                       const std::vector<std::vector<std::uint32_t>>& solutionSets,
                                       std::size_t domainSize, double beta, Rng& rng, std::size_t monteCarloSamples) {
  ProjectionCheck r;
  const std::size_t m = sets.size();
  const double X = static_cast<double>(domainSize);
  if (domainSize == 0 || !(beta > 8.0 * static_cast<double>(m) / X)) {
    r.skipped = true;
    r.reason = "beta must exceed 8m/|X|";
    return r;
  }
  for (const auto& s : sets)
    if (s.empty()) {
      r.skipped = true;
      r.reason = "every selected set must be nonempty";
      return r;
    }

  std::vector<std::size_t> freq(domainSize, 0);
  bool small = solutionSets.size() == m;
  for (const auto& a : solutionSets) {
    small = small && !a.empty() && 2 * a.size() <= domainSize;
    for (std::uint32_t x : a) ++freq.at(x);
  }
  const std::size_t peak = freq.empty() ? 0 : *std::max_element(freq.begin(), freq.end());
  r.hypotheses = small && static_cast<double>(peak) <= beta / 2.0;

  // Per-element membership probabilities p_i(x) = 1[x in A_i] / |A_i|.
  std::vector<std::vector<double>> probs(domainSize);
  for (const auto& s : sets) {
    const double w = 1.0 / static_cast<double>(s.size());
    for (std::uint32_t x : s) probs.at(x).push_back(w);
  }
  for (std::size_t x = 0; x < domainSize; ++x) r.upperEstimate += tail_above(probs[x], beta);
  r.bound = X * std::exp(-2.0 * static_cast<double>(m) / (9.0 * X));
  r.pass = r.upperEstimate < r.bound;

  std::size_t hits = 0;
  std::vector<std::uint32_t> count(domainSize);
  for (std::size_t t = 0; t < monteCarloSamples; ++t) {
    std::fill(count.begin(), count.end(), 0);
    bool out = false;
    for (const auto& s : sets) {
      const std::uint32_t x = s[rng.below(s.size())];
      if (static_cast<double>(++count[x]) > beta) out = true;
    }
    hits += out ? 1 : 0;
  }
  r.samples = monteCarloSamples;
  if (monteCarloSamples > 0) {
    const double S = static_cast<double>(monteCarloSamples);
    r.monteCarlo = static_cast<double>(hits) / S;
    r.monteCarloSigma = std::sqrt(r.monteCarlo * (1.0 - r.monteCarlo) / S);
  }
  return r;
}

}  // namespace qclique::qsearch
