#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclique/rng.hpp"

namespace qclique::qsearch {

/// Boolean function over a finite domain {0, ..., size-1}. After
/// dummy_extend the last element is the dummy ⊥ and is always a solution.
class TruthTable {
 public:
  TruthTable() = default;
  explicit TruthTable(std::vector<bool> bits, bool extended = false);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t x) const { return bits_[x]; }
  bool extended() const { return extended_; }
  /// Index of ⊥ (only meaningful when extended).
  std::size_t dummy() const { return bits_.size() - 1; }
  std::size_t solutions() const { return solutions_; }
  /// Solutions excluding ⊥.
  std::size_t real_solutions() const { return solutions_ - (extended_ ? 1 : 0); }
  const std::vector<bool>& bits() const { return bits_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  std::vector<bool> bits_;
  bool extended_ = false;
  std::size_t solutions_ = 0;
};

class DummyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Appends ⊥ with g(⊥) = 1. Throws DummyError on an already extended table.
TruthTable dummy_extend(const TruthTable& g);

/// Unit vector of complex amplitudes over a domain of at least 2 elements.
class AmplitudeVector {
 public:
  static AmplitudeVector uniform(std::size_t size);

  std::size_t size() const { return a_.size(); }
  std::complex<double> operator[](std::size_t x) const { return a_[x]; }
  std::complex<double>& operator[](std::size_t x) { return a_[x]; }
  double probability(std::size_t x) const { return std::norm(a_[x]); }
  double norm2() const;
  double success_probability(const TruthTable& g) const;
  /// Throws std::logic_error when |norm2 - 1| > 1e-9.
  void check_normalized() const;

 private:
  explicit AmplitudeVector(std::size_t size) : a_(size) {}
  std::vector<std::complex<double>> a_;
};

/// One Grover iteration: phase flip on solutions, then reflection about the mean.
void grover_iterate(AmplitudeVector& v, const TruthTable& g);
AmplitudeVector grover_state(const TruthTable& g, std::size_t iterations);

/// sin^2((2k+1) theta) with sin theta = sqrt(solutions / size).
double closed_form_success(std::size_t size, std::size_t solutions, std::size_t iterations);

/// Number of steps in one pass over a domain of `size` elements:
/// ceil(log_{6/5} sqrt(size)) + ceil(log2 size).
std::size_t schedule_length(std::size_t size);
/// Per-step cap min(ceil((6/5)^j), ceil(sqrt(size))), j = 1, 2, ...
std::size_t schedule_cap(std::size_t size, std::size_t step);
/// One pass: k_j uniform in [0, schedule_cap(size, j)].
std::vector<std::size_t> schedule_iterations(std::size_t size, Rng& rng);
/// Pinned bound on the iterations of one pass: 8 sqrt(size) ln(size).
double schedule_sum_bound(std::size_t size);
/// Passes for amplification: max(8, ceil(2 ln m)).
std::size_t amplification_passes(std::size_t m);
/// Classical uniform probes before searching: max(4, ceil(4 ln m)).
std::size_t pretest_samples(std::size_t m);

/// Coordinates sharing one truth table. All their amplitude vectors coincide,
/// so one vector per group represents every member exactly.
struct SearchGroup {
  TruthTable table;  // extended with ⊥
  std::vector<std::uint32_t> members;
};

/// m independent searches over a common domain X, kept as a product state:
/// one amplitude vector per distinct truth table instead of |X|^m amplitudes.
class SearchEnsemble {
 public:
  SearchEnsemble() = default;
  /// `tables` are over X (not extended); coordinate i gets tables[i].
  SearchEnsemble(std::size_t domainSize, const std::vector<TruthTable>& tables);
  /// Pre-grouped form: every group's table is over X (not extended) and the
  /// members of all groups together must be exactly 0..m-1.
  static SearchEnsemble from_groups(std::size_t domainSize, std::vector<SearchGroup> groups);

  std::size_t m() const { return m_; }
  std::size_t domain_size() const { return domain_; }
  std::size_t extended_size() const { return domain_ + 1; }
  const std::vector<SearchGroup>& groups() const { return groups_; }
  const TruthTable& table_of(std::size_t coordinate) const { return groups_[groupOf_[coordinate]].table; }

  /// State of one coordinate after k iterations from the uniform superposition.
  AmplitudeVector state(std::size_t coordinate, std::size_t k) const;
  /// Probability that measuring all coordinates after k iterations yields a
  /// solution in each, from the simulated vectors.
  double joint_success_probability(std::size_t k) const;
  /// max over x in X of #{i : g_i(x) = 1}.
  std::size_t max_solution_frequency() const;

 private:
  std::size_t domain_ = 0;
  std::size_t m_ = 0;
  std::vector<SearchGroup> groups_;
  std::vector<std::uint32_t> groupOf_;
};

/// Result of evaluating one rehearsal tuple: rounds it cost, and for each
/// ensemble whether the evaluator returned an error instead of answers.
struct StepCost {
  std::uint64_t rounds = 0;
  std::vector<bool> errored;
};

/// Receives, per ensemble, how many coordinates query each element of X in the
/// current tuple (⊥ is never queried: its value is known locally).
using StepEvaluator = std::function<StepCost(const std::vector<std::vector<std::uint64_t>>& histograms)>;

struct LockstepOptions {
  /// m used for the pass and pretest counts; 0 means the largest ensemble.
  std::size_t logicalM = 0;
  bool pretest = true;
  /// Tuples with some frequency above beta count as typicality violations.
  double beta = std::numeric_limits<double>::infinity();
  /// Schedule domain size; 0 means the largest extended domain.
  std::size_t scheduleSize = 0;
};

struct LockstepStats {
  std::uint64_t passes = 0;
  std::uint64_t steps = 0;
  std::uint64_t pretestSteps = 0;
  std::uint64_t groverIterations = 0;
  std::uint64_t maxIterationsPerPass = 0;
  std::uint64_t classicalRounds = 0;
  std::uint64_t quantumChargedRounds = 0;
  std::uint64_t maxStepRounds = 0;
  std::uint64_t typicalityViolations = 0;
  std::uint64_t erroredEvaluations = 0;
  std::uint64_t maxObservedFrequency = 0;
};

struct LockstepResult {
  /// found[e][i]: element of X found by coordinate i of ensemble e, or empty (⊥).
  std::vector<std::vector<std::optional<std::uint32_t>>> found;
  LockstepStats stats;
};

/// Runs every ensemble's searches in lockstep under one shared schedule.
///
/// Each pass draws a schedule; at each step every still-active coordinate is
/// measured after k_j iterations. The measured tuple doubles as the rehearsal
/// input: it is handed to `evaluate`, whose round cost is charged once as
/// classical and k_j times as quantum-charged. A real solution retires the
/// coordinate, ⊥ parks it until the next pass. Coordinates of an ensemble whose
/// evaluation errored keep searching.
LockstepResult run_lockstep(const std::vector<SearchEnsemble>& ensembles, const LockstepOptions& options,
                            const StepEvaluator& evaluate, Rng& rng);

/// Single search; returns a solution of g, or empty for ⊥.
std::optional<std::uint32_t> grover_search(const TruthTable& g, Rng& rng, std::size_t m = 1);

/// m parallel searches with a free evaluator.
std::vector<std::optional<std::uint32_t>> multi_search_product(const SearchEnsemble& ens, Rng& rng);

/// True iff no element occurs more than beta times.
bool typical_membership(const std::vector<std::uint32_t>& tuple, double beta);

struct TypicalityReport {
  std::size_t m = 0;
  std::size_t domainSize = 0;
  double beta = 0.0;
  bool domainBoundLn = false;    // |X| < m / (36 ln m)
  bool domainBoundLog2 = false;  // |X| < m / (36 log2 m)
  bool betaBound = false;        // beta > 8 m / |X|
  bool solutionFrequency = false;  // max_x #{i : x in A1_i} <= beta / 2
  std::size_t maxSolutionFrequency = 0;
  std::uint64_t typicalityViolations = 0;
};

/// Hypothesis flags for one ensemble (constants overridable).
TypicalityReport typicality_hypotheses(const SearchEnsemble& ens, std::size_t m, double beta,
                                       double domainConstant = 36.0, double betaConstant = 8.0);

struct TypicalSearchResult {
  LockstepResult run;
  TypicalityReport report;
};

/// Typical multi-search over one ensemble: hypotheses are
/// reported (not enforced) and every rehearsal tuple is tested against beta.
TypicalSearchResult multi_search_typical(const SearchEnsemble& ens, double beta, const StepEvaluator& evaluate,
                                         Rng& rng);

struct ProjectionCheck {
  bool skipped = false;
  std::string reason;
  bool hypotheses = false;
  double upperEstimate = 0.0;
  double bound = 0.0;
  bool pass = false;
  double monteCarlo = 0.0;
  double monteCarloSigma = 0.0;
  std::size_t samples = 0;
};

/// Sets A_i^{b_i}: A1_i where b_i = 1, X \ A1_i where b_i = 0.
std::vector<std::vector<std::uint32_t>> select_sets(const std::vector<bool>& b,
                                                    const std::vector<std::vector<std::uint32_t>>& solutionSets,
                                                    std::size_t domainSize);

/// Squared norm of the projection of |psi^b> outside the beta-typical set.
/// The union-bound estimate sums exact Poisson-binomial tails; a Monte-Carlo
/// estimate of the exact probability is reported alongside.
ProjectionCheck projection_bound_check(const std::vector<std::vector<std::uint32_t>>& sets,
                                       const std::vector<std::vector<std::uint32_t>>& solutionSets,
                                       std::size_t domainSize, double beta, Rng& rng,
                                       std::size_t monteCarloSamples = 20000);

}  // namespace qclique::qsearch
