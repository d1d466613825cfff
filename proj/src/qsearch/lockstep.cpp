#include <algorithm>
#include <map>
#include <tuple>
#include <numeric>

#include "qclique/qsearch.hpp"

namespace qclique::qsearch {

namespace {

// perm = [retired | active | waiting]; members are permuted once up front and
// outcomes only ever depend on counts, so assigning outcomes by position is an
// exact sample for identical tables.
struct GroupState {
  const SearchGroup* group = nullptr;
  std::vector<std::uint32_t> perm;
  std::size_t retired = 0;
  std::size_t activeEnd = 0;
  std::vector<std::uint64_t> counts;  // outcome counts over X ∪ {⊥}, this step

  std::size_t active() const { return activeEnd - retired; }
  std::size_t waiting() const { return perm.size() - activeEnd; }
};

// Counts of a multinomial draw, via one binomial per outcome.
void multinomial(std::uint64_t trials, const std::vector<double>& probs, Rng& rng, std::vector<std::uint64_t>& out) {
  out.assign(probs.size(), 0);
  double mass = std::accumulate(probs.begin(), probs.end(), 0.0);
  std::uint64_t left = trials;
  std::size_t last = probs.size();
  while (last > 0 && probs[last - 1] <= 0.0) --last;
  for (std::size_t x = 0; x < last && left > 0; ++x) {
    if (probs[x] <= 0.0) continue;
    std::uint64_t c = left;
    if (x + 1 < last && mass > 0.0) c = rng.binomial(left, std::min(1.0, probs[x] / mass));
    mass -= probs[x];
    left -= c;
    out[x] = c;
  }
  if (left > 0) out[last == 0 ? 0 : last - 1] += left;
}

// Probability of one solution and of one non-solution after k iterations; the
// state depends on the table only through (size, solutions).
class StateCache {
 public:
  std::pair<double, double> get(std::size_t size, std::size_t solutions, std::size_t k) {
    const auto key = std::make_tuple(size, solutions, k);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    std::vector<bool> bits(size, false);
    for (std::size_t x = 0; x < solutions; ++x) bits[x] = true;
    const TruthTable t(std::move(bits));
    const AmplitudeVector v = grover_state(t, k);
    const std::pair<double, double> p{v.probability(0), solutions < size ? v.probability(size - 1) : 0.0};
    cache_.emplace(key, p);
    return p;
  }

 private:
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::pair<double, double>> cache_;
};

}  // namespace

LockstepResult run_lockstep(const std::vector<SearchEnsemble>& ensembles, const LockstepOptions& options,
                            const StepEvaluator& evaluate, Rng& rng) {
  LockstepResult res;
  LockstepStats& st = res.stats;
  const std::size_t E = ensembles.size();
  res.found.resize(E);

  std::size_t logicalM = options.logicalM;
  std::size_t scheduleSize = options.scheduleSize;
  std::vector<std::vector<GroupState>> state(E);
  Rng permRng = rng.substream("lockstep-perm");
  for (std::size_t e = 0; e < E; ++e) {
    const SearchEnsemble& ens = ensembles[e];
    res.found[e].assign(ens.m(), std::nullopt);
    if (options.logicalM == 0) logicalM = std::max(logicalM, ens.m());
    if (options.scheduleSize == 0) scheduleSize = std::max(scheduleSize, ens.extended_size());
    for (const SearchGroup& g : ens.groups()) {
      GroupState gs;
      gs.group = &g;
      gs.perm = g.members;
      std::shuffle(gs.perm.begin(), gs.perm.end(), permRng);
      gs.activeEnd = gs.perm.size();
      state[e].push_back(std::move(gs));
    }
  }
  scheduleSize = std::max<std::size_t>(scheduleSize, 2);

  auto any = [&](auto pred) {
    for (const auto& groups : state)
      for (const auto& gs : groups)
        if (pred(gs)) return true;
    return false;
  };

  std::vector<std::vector<std::uint64_t>> hist(E);
  std::vector<double> probs;

  // Draws outcomes for every active coordinate, evaluates the tuple and applies
  // the measurement results. `probsOf` fills the distribution over X ∪ {⊥}.
  auto step = [&](auto&& probsOf) -> std::uint64_t {
    for (std::size_t e = 0; e < E; ++e) {
      const std::size_t X = ensembles[e].domain_size();
      hist[e].assign(X, 0);
      for (GroupState& gs : state[e]) {
        gs.counts.clear();
        if (gs.active() == 0) continue;
        probsOf(*gs.group, X, probs);
        multinomial(gs.active(), probs, rng, gs.counts);
        for (std::size_t x = 0; x < X && x < gs.counts.size(); ++x) hist[e][x] += gs.counts[x];
      }
    }
    StepCost cost = evaluate(hist);
    st.maxStepRounds = std::max(st.maxStepRounds, cost.rounds);
    for (std::size_t e = 0; e < E; ++e) {
      const std::uint64_t peak = hist[e].empty() ? 0 : *std::max_element(hist[e].begin(), hist[e].end());
      st.maxObservedFrequency = std::max(st.maxObservedFrequency, peak);
      if (static_cast<double>(peak) > options.beta) ++st.typicalityViolations;
      const bool errored = e < cost.errored.size() && cost.errored[e];
      if (errored) ++st.erroredEvaluations;
      const std::size_t X = ensembles[e].domain_size();
      for (GroupState& gs : state[e]) {
        if (gs.counts.empty()) continue;
        // Active positions, in order: retiring, staying active, parked on ⊥.
        std::size_t pos = gs.retired;
        std::uint64_t stay = 0;
        for (std::size_t x = 0; x < X && x < gs.counts.size(); ++x) {
          if (gs.group->table[x] && !errored) {
            for (std::uint64_t c = 0; c < gs.counts[x]; ++c) res.found[e][gs.perm[pos++]] = static_cast<std::uint32_t>(x);
          } else {
            stay += gs.counts[x];
          }
        }
        gs.retired = pos;
        gs.activeEnd = pos + stay;
      }
    }
    return cost.rounds;
  };

  if (options.pretest) {
    const std::size_t samples = pretest_samples(logicalM);
    for (std::size_t s = 0; s < samples && any([](const GroupState& g) { return g.active() > 0; }); ++s) {
      const std::uint64_t rounds = step([](const SearchGroup&, std::size_t X, std::vector<double>& p) {
        p.assign(X + 1, X == 0 ? 0.0 : 1.0 / static_cast<double>(X));
        p[X] = X == 0 ? 1.0 : 0.0;  // classical probes never draw ⊥
      });
      st.classicalRounds += rounds;
      ++st.pretestSteps;
    }
  }

  StateCache cache;
  const std::size_t passes = amplification_passes(logicalM);
  for (std::size_t pass = 0; pass < passes; ++pass) {
    if (!any([](const GroupState& g) { return g.active() + g.waiting() > 0; })) break;
    for (auto& groups : state)
      for (GroupState& gs : groups) gs.activeEnd = gs.perm.size();
    ++st.passes;
    std::uint64_t passIterations = 0;
    for (std::size_t k : schedule_iterations(scheduleSize, rng)) {
      if (!any([](const GroupState& g) { return g.active() > 0; })) break;
      const std::uint64_t rounds = step([k, &cache](const SearchGroup& g, std::size_t, std::vector<double>& p) {
        if (g.table.size() < 2) {
          p.assign(1, 1.0);
          return;
        }
        const auto [sol, non] = cache.get(g.table.size(), g.table.solutions(), k);
        p.resize(g.table.size());
        for (std::size_t x = 0; x < p.size(); ++x) p[x] = g.table[x] ? sol : non;
      });
      ++st.steps;
      st.groverIterations += k;
      passIterations += k;
      st.classicalRounds += rounds;
      st.quantumChargedRounds += k * rounds;
    }
    st.maxIterationsPerPass = std::max(st.maxIterationsPerPass, passIterations);
  }
  return res;
}

std::optional<std::uint32_t> grover_search(const TruthTable& g, Rng& rng, std::size_t m) {
  std::vector<SearchEnsemble> one{SearchEnsemble(g.size(), {g})};
  LockstepOptions opts;
  opts.logicalM = m;
  auto free = [](const std::vector<std::vector<std::uint64_t>>&) { return StepCost{}; };
  return run_lockstep(one, opts, free, rng).found[0][0];
}

std::vector<std::optional<std::uint32_t>> multi_search_product(const SearchEnsemble& ens, Rng& rng) {
  auto free = [](const std::vector<std::vector<std::uint64_t>>&) { return StepCost{}; };
  return run_lockstep({ens}, LockstepOptions{}, free, rng).found[0];
}

}  // namespace qclique::qsearch
