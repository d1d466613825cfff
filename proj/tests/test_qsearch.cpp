#include <doctest.h>

#include <cmath>

#include "qclique/oracles.hpp"
#include "qclique/qsearch.hpp"

using namespace qclique;
using namespace qclique::qsearch;

namespace {

TruthTable table(std::size_t size, std::initializer_list<std::size_t> solutions) {
  std::vector<bool> bits(size, false);
  for (std::size_t x : solutions) bits[x] = true;
  return TruthTable(bits);
}

TruthTable random_table(std::size_t size, double density, Rng& rng) {
  std::vector<bool> bits(size);
  for (std::size_t x = 0; x < size; ++x) bits[x] = rng.bernoulli(density);
  return TruthTable(bits);
}

StepCost no_cost(const std::vector<std::vector<std::uint64_t>>&) { return {}; }

// Random solution family with |A1_i| <= |X|/2 and every frequency <= cap.
std::vector<std::vector<std::uint32_t>> bounded_family(std::size_t X, std::size_t m, std::size_t cap, Rng& rng) {
  std::vector<std::size_t> freq(X, 0);
  std::vector<std::vector<std::uint32_t>> fam(m);
  for (auto& a : fam) {
    const std::size_t want = 1 + rng.below(std::max<std::size_t>(1, X / 2));
    std::vector<std::uint32_t> order(X);
    for (std::uint32_t x = 0; x < X; ++x) order[x] = x;
    std::shuffle(order.begin(), order.end(), rng);
    for (std::uint32_t x : order)
      if (a.size() < want && freq[x] < cap) {
        a.push_back(x);
        ++freq[x];
      }
    std::sort(a.begin(), a.end());
  }
  return fam;
}

}  // namespace

TEST_CASE("grover_iterate examples") {
  SUBCASE("one solution in four") {
    AmplitudeVector v = AmplitudeVector::uniform(4);
    TruthTable g = table(4, {2});
    grover_iterate(v, g);
    CHECK(v.success_probability(g) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(v[2] - 1.0) < 1e-9);
  }
  SUBCASE("zero iterations") {
    TruthTable g = table(10, {1, 4, 7});
    CHECK(grover_state(g, 0).success_probability(g) == doctest::Approx(0.3).epsilon(1e-12));
  }
  SUBCASE("all solutions is a fixed point up to phase") {
    TruthTable g = table(5, {0, 1, 2, 3, 4});
    AmplitudeVector v = grover_state(g, 3);
    for (std::size_t x = 0; x < 5; ++x) CHECK(v.probability(x) == doctest::Approx(0.2).epsilon(1e-12));
  }
  CHECK_THROWS(AmplitudeVector::uniform(1));
}

TEST_CASE("dummy_extend") {
  TruthTable none = table(3, {});
  TruthTable e = dummy_extend(none);
  CHECK(e.size() == 4);
  CHECK(e.solutions() == 1);
  CHECK(e[e.dummy()]);
  CHECK(dummy_extend(table(6, {0, 5})).solutions() == 3);
  CHECK_THROWS_AS(dummy_extend(e), DummyError);
}

TEST_CASE("closed form, norm and subspace invariance") {
  for (std::size_t N = 2; N <= 65; ++N) {
    for (std::size_t s = 1; 2 * s <= N; ++s) {
      std::vector<bool> bits(N, false);
      for (std::size_t i = 0; i < s; ++i) bits[(i * 7) % N] = true;
      if (static_cast<std::size_t>(std::count(bits.begin(), bits.end(), true)) != s) continue;
      TruthTable g(bits);
      AmplitudeVector v = AmplitudeVector::uniform(N);
      for (std::size_t k = 0; k <= 12; ++k) {
        CHECK(std::abs(v.success_probability(g) - closed_form_success(N, s, k)) < 1e-9);
        CHECK(std::abs(v.norm2() - 1.0) < 1e-9);
        std::complex<double> a0, a1;
        bool have0 = false, have1 = false;
        for (std::size_t x = 0; x < N; ++x) {
          auto& ref = bits[x] ? a1 : a0;
          bool& have = bits[x] ? have1 : have0;
          if (!have) {
            ref = v[x];
            have = true;
          }
          CHECK(std::abs(v[x] - ref) < 1e-12);
        }
        grover_iterate(v, g);
      }
    }
  }
}

TEST_CASE("schedule") {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    for (std::size_t k : schedule_iterations(4, rng)) CHECK(k <= 2);
    for (std::size_t k : schedule_iterations(2, rng)) CHECK(k <= 2);
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng r(seed);
    for (std::size_t N : {2u, 3u, 4u, 5u, 17u, 64u, 100u, 257u, 512u, 1000u, 1024u}) {
      std::size_t sum = 0;
      for (std::size_t k : schedule_iterations(N, r)) sum += k;
      CHECK(static_cast<double>(sum) <= schedule_sum_bound(N));
    }
  }
  // Worst case: every k_j at its cap.
  for (std::size_t N = 2; N <= 1024; ++N) {
    std::size_t worst = 0;
    for (std::size_t j = 1; j <= schedule_length(N); ++j) worst += schedule_cap(N, j);
    CHECK(static_cast<double>(worst) <= schedule_sum_bound(N));
  }
  CHECK(amplification_passes(1) == 8);
  CHECK(amplification_passes(100000) == 24);
  CHECK(pretest_samples(3) == 5);
}

TEST_CASE("grover_search") {
  SUBCASE("no solution gives the dummy") {
    Rng rng(2);
    CHECK_FALSE(grover_search(table(8, {}), rng).has_value());
  }
  SUBCASE("one solution in four") {
    int hits = 0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
      Rng rng(t);
      auto r = grover_search(table(4, {3}), rng);
      if (r && *r == 3) ++hits;
    }
    CHECK(hits >= 990);
  }
  SUBCASE("all solutions never returns the dummy") {
    for (std::uint64_t t = 0; t < 200; ++t) {
      Rng rng(t);
      CHECK(grover_search(table(6, {0, 1, 2, 3, 4, 5}), rng).has_value());
    }
  }
  SUBCASE("large domain") {
    int hits = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
      Rng rng(t);
      auto r = grover_search(table(200, {17}), rng);
      if (r && *r == 17) ++hits;
    }
    CHECK(hits >= 198);
  }
}

TEST_CASE("multi_search_product") {
  SUBCASE("m = 1 matches grover_search") {
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng a(t), b(t);
      TruthTable g = table(9, {4});
      CHECK(grover_search(g, a) == multi_search_product(SearchEnsemble(9, {g}), b)[0]);
    }
  }
  SUBCASE("three disjoint single solutions") {
    SearchEnsemble ens(4, {table(4, {0}), table(4, {1}), table(4, {2})});
    int hits = 0;
    for (std::uint64_t t = 0; t < 1000; ++t) {
      Rng rng(t);
      auto r = multi_search_product(ens, rng);
      if (r[0] == 0u && r[1] == 1u && r[2] == 2u) ++hits;
    }
    CHECK(hits >= 970);
  }
  SUBCASE("empty table gives the dummy in that coordinate") {
    SearchEnsemble ens(5, {table(5, {1}), table(5, {}), table(5, {1})});
    CHECK(ens.groups().size() == 2);
    Rng rng(3);
    auto r = multi_search_product(ens, rng);
    CHECK_FALSE(r[1].has_value());
  }
  SUBCASE("joint success is the product of closed forms") {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
      const std::size_t X = 3 + rng.below(30);
      std::vector<TruthTable> tabs;
      for (int i = 0; i < 6; ++i) tabs.push_back(random_table(X, 0.3, rng));
      SearchEnsemble ens(X, tabs);
      for (std::size_t k = 0; k < 6; ++k) {
        double expected = 1.0;
        for (const auto& g : tabs) expected *= closed_form_success(X + 1, g.solutions() + 1, k);
        CHECK(std::abs(ens.joint_success_probability(k) - expected) < 1e-9);
      }
    }
  }
  SUBCASE("grouping preserves coordinates") {
    std::vector<SearchGroup> groups{{table(4, {1}), {2, 0}}, {table(4, {3}), {1}}};
    SearchEnsemble ens = SearchEnsemble::from_groups(4, groups);
    CHECK(ens.m() == 3);
    CHECK(ens.table_of(1)[3]);
    CHECK(ens.table_of(2)[1]);
    CHECK_THROWS(SearchEnsemble::from_groups(4, {{table(4, {1}), {0, 0}}}));
  }
}

TEST_CASE("lockstep cost accounting") {
  SearchEnsemble ens(16, {table(16, {3}), table(16, {5}), table(16, {})});
  Rng rng(4);
  std::size_t calls = 0;
  auto eval = [&](const std::vector<std::vector<std::uint64_t>>& h) {
    ++calls;
    std::uint64_t queried = 0;
    for (auto c : h[0]) queried += c;
    CHECK(queried <= 3);
    return StepCost{3, {false}};
  };
  LockstepResult r = run_lockstep({ens}, LockstepOptions{}, eval, rng);
  CHECK(calls == r.stats.steps + r.stats.pretestSteps);
  CHECK(r.stats.classicalRounds == 3 * calls);
  CHECK(r.stats.quantumChargedRounds == 3 * r.stats.groverIterations);
  CHECK(r.stats.maxIterationsPerPass <= schedule_sum_bound(17));

  Rng rng2(4);
  auto erring = [](const std::vector<std::vector<std::uint64_t>>&) { return StepCost{1, {true}}; };
  LockstepResult bad = run_lockstep({ens}, LockstepOptions{}, erring, rng2);
  for (const auto& f : bad.found[0]) CHECK_FALSE(f.has_value());
  CHECK(bad.stats.erroredEvaluations == bad.stats.steps + bad.stats.pretestSteps);
}

TEST_CASE("typical_membership") {
  CHECK(typical_membership({0, 0, 1}, 2));
  CHECK_FALSE(typical_membership({0, 0, 1}, 1));
  CHECK(typical_membership({}, 0));
}

TEST_CASE("multi_search_typical") {
  SUBCASE("beta at least m never violates") {
    Rng rng(5);
    std::vector<TruthTable> tabs(20, table(3, {1}));
    auto out = multi_search_typical(SearchEnsemble(3, tabs), 20, no_cost, rng);
    CHECK(out.report.typicalityViolations == 0);
  }
  SUBCASE("bounded solution frequency keeps the result typical") {
    const std::size_t X = 8, m = 64;
    const double beta = 8.0 * m / X + 1;  // 65
    Rng gen(6);
    auto fam = bounded_family(X, m, static_cast<std::size_t>(beta / 2), gen);
    std::vector<TruthTable> tabs;
    for (const auto& a : fam) {
      std::vector<bool> bits(X, false);
      for (auto x : a) bits[x] = true;
      tabs.emplace_back(bits);
    }
    SearchEnsemble ens(X, tabs);
    CHECK(typicality_hypotheses(ens, m, beta).solutionFrequency);
    for (std::uint64_t t = 0; t < 1000; ++t) {
      Rng rng(t);
      auto out = multi_search_typical(ens, beta, no_cost, rng);
      std::vector<std::uint32_t> tuple;
      for (const auto& f : out.run.found[0])
        if (f) tuple.push_back(*f);
      CHECK(typical_membership(tuple, beta));
    }
  }
  SUBCASE("hypothesis failure is flagged") {
    std::vector<TruthTable> tabs(10, table(4, {2}));
    TypicalityReport rep = typicality_hypotheses(SearchEnsemble(4, tabs), 10, 6.0);
    CHECK_FALSE(rep.solutionFrequency);
    CHECK(rep.maxSolutionFrequency == 10);
    CHECK_FALSE(rep.domainBoundLn);
  }
  SUBCASE("domain bound in both readings") {
    std::vector<TruthTable> tabs(100000, table(2, {0}));
    TypicalityReport rep = typicality_hypotheses(SearchEnsemble(2, tabs), 100000, 1e6);
    CHECK(rep.domainBoundLn);  // 100000 / (36 ln 1e5) = 241
    CHECK(rep.domainBoundLog2);
    CHECK(rep.betaBound);
  }
}

TEST_CASE("solution-set frequency criterion, both directions") {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const std::size_t X = 2 + rng.below(3), m = 1 + rng.below(4);
    std::vector<TruthTable> tabs;
    std::vector<std::vector<std::uint32_t>> sets(m);
    for (std::size_t i = 0; i < m; ++i) {
      TruthTable g = random_table(X, 0.5, rng);
      if (g.solutions() == 0) g = table(X, {0});
      for (std::uint32_t x = 0; x < X; ++x)
        if (g[x]) sets[i].push_back(x);
      tabs.push_back(g);
    }
    const double half = static_cast<double>(rng.below(m + 1));
    // Enumerate the whole product A1_1 x ... x A1_m.
    bool allTypical = true;
    std::vector<std::size_t> idx(m, 0);
    while (true) {
      std::vector<std::uint32_t> tuple(m);
      for (std::size_t i = 0; i < m; ++i) tuple[i] = sets[i][idx[i]];
      allTypical = allTypical && typical_membership(tuple, half);
      std::size_t i = 0;
      while (i < m && ++idx[i] == sets[i].size()) idx[i++] = 0;
      if (i == m) break;
    }
    SearchEnsemble ens(X, tabs);
    CHECK(typicality_hypotheses(ens, m, 2 * half).solutionFrequency == allTypical);
  }
}

TEST_CASE("projection_bound_check examples") {
  Rng rng(10);
  SUBCASE("beta at least m") {
    std::vector<std::vector<std::uint32_t>> sets(5, {0, 1});
    ProjectionCheck c = projection_bound_check(sets, {}, 4, 11, rng);
    CHECK_FALSE(c.skipped);
    CHECK(c.upperEstimate == 0.0);
    CHECK(c.monteCarlo == 0.0);
    CHECK(c.pass);
  }
  SUBCASE("nine elements, twelve coordinates") {
    std::vector<std::uint32_t> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::vector<std::uint32_t>> sets(12, all);
    ProjectionCheck c = projection_bound_check(sets, {}, 9, 11, rng);
    CHECK(c.upperEstimate == doctest::Approx(9.0 * std::pow(1.0 / 9.0, 12)).epsilon(1e-9));
  }
  SUBCASE("nine elements, ninety coordinates") {
    std::vector<std::uint32_t> all{0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<std::vector<std::uint32_t>> sets(90, all);
    ProjectionCheck c = projection_bound_check(sets, {}, 9, 81, rng);
    CHECK(c.bound == doctest::Approx(9.0 * std::exp(-180.0 / 81.0)));
    CHECK(c.upperEstimate < 0.975);
    CHECK(c.pass);
  }
  SUBCASE("preconditions") {
    std::vector<std::vector<std::uint32_t>> sets(8, {0});
    CHECK(projection_bound_check(sets, {}, 4, 16, rng).skipped);
    sets[3].clear();
    CHECK(projection_bound_check(sets, {}, 4, 17, rng).skipped);
  }
}

TEST_CASE("projection_bound_check on random families") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const std::size_t X = 4 + rng.below(9);
    const std::size_t m = X + rng.below(8 * X);
    const double beta = std::floor(8.0 * m / X) + 1 + rng.below(3);
    auto fam = bounded_family(X, m, static_cast<std::size_t>(beta / 2), rng);
    std::vector<bool> b(m);
    for (std::size_t i = 0; i < m; ++i) b[i] = rng.bernoulli(0.5);
    auto sets = select_sets(b, fam, X);
    ProjectionCheck c = projection_bound_check(sets, fam, X, beta, rng, 4000);
    REQUIRE_FALSE(c.skipped);
    CHECK(c.hypotheses);
    CHECK(c.pass);
    CHECK(c.monteCarlo <= c.upperEstimate + 3 * c.monteCarloSigma + 1e-12);

    // Independent tail computation.
    double upper = 0.0;
    for (std::uint32_t x = 0; x < X; ++x) {
      std::vector<double> p;
      for (const auto& s : sets)
        if (std::find(s.begin(), s.end(), x) != s.end()) p.push_back(1.0 / static_cast<double>(s.size()));
      upper += oracles::poisson_binomial_tail(p, beta);
    }
    CHECK(c.upperEstimate == doctest::Approx(upper).epsilon(1e-9));
  }
}
