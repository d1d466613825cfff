#include <algorithm>
#include <cmath>
#include <map>

#include "qclique/qsearch.hpp"

namespace qclique::qsearch {

TruthTable::TruthTable(std::vector<bool> bits, bool extended) : bits_(std::move(bits)), extended_(extended) {
  if (extended_ && (bits_.empty() || !bits_.back())) throw DummyError("extended table must end with g(⊥) = 1");
  solutions_ = static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

TruthTable dummy_extend(const TruthTable& g) {
  if (g.extended()) throw DummyError("domain already carries ⊥");
  std::vector<bool> bits = g.bits();
  bits.push_back(true);
  return TruthTable(std::move(bits), true);
}

AmplitudeVector AmplitudeVector::uniform(std::size_t size) {
  if (size < 2) throw std::invalid_argument("amplitude vector needs at least 2 elements");
  AmplitudeVector v(size);
  const double a = 1.0 / std::sqrt(static_cast<double>(size));
  std::fill(v.a_.begin(), v.a_.end(), std::complex<double>(a, 0.0));
  return v;
}

double AmplitudeVector::norm2() const {
  double s = 0.0;
  for (const auto& z : a_) s += std::norm(z);
  return s;
}

double AmplitudeVector::success_probability(const TruthTable& g) const {
  double s = 0.0;
  for (std::size_t x = 0; x < a_.size(); ++x)
    if (g[x]) s += std::norm(a_[x]);
  return s;
}

void AmplitudeVector::check_normalized() const {
  if (std::abs(norm2() - 1.0) > 1e-9) throw std::logic_error("amplitude vector is not normalized");
}

void grover_iterate(AmplitudeVector& v, const TruthTable& g) {
  if (g.size() != v.size()) throw std::invalid_argument("truth table and vector sizes differ");
  std::complex<double> sum = 0.0;
  for (std::size_t x = 0; x < v.size(); ++x) {
    if (g[x]) v[x] = -v[x];
    sum += v[x];
  }
  const std::complex<double> twiceMean = 2.0 * sum / static_cast<double>(v.size());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = twiceMean - v[x];
}

AmplitudeVector grover_state(const TruthTable& g, std::size_t iterations) {
  AmplitudeVector v = AmplitudeVector::uniform(g.size());
  for (std::size_t k = 0; k < iterations; ++k) grover_iterate(v, g);
  return v;
}

double closed_form_success(std::size_t size, std::size_t solutions, std::size_t iterations) {
  const double theta = std::asin(std::sqrt(static_cast<double>(solutions) / static_cast<double>(size)));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

std::size_t schedule_length(std::size_t size) {
  if (size < 2) throw std::invalid_argument("schedule needs a domain of at least 2 elements");
  const double n = static_cast<double>(size);
  const double growth = std::ceil(std::log(std::sqrt(n)) / std::log(1.2) - 1e-12);
  const double doubling = std::ceil(std::log2(n) - 1e-12);
  return static_cast<std::size_t>(growth + doubling);
}

std::size_t schedule_cap(std::size_t size, std::size_t step) {
  const double grown = std::ceil(std::pow(1.2, static_cast<double>(step)) - 1e-12);
  const double root = std::ceil(std::sqrt(static_cast<double>(size)) - 1e-12);
  return static_cast<std::size_t>(std::min(grown, root));
}

std::vector<std::size_t> schedule_iterations(std::size_t size, Rng& rng) {
  const std::size_t steps = schedule_length(size);
  std::vector<std::size_t> ks(steps);
  for (std::size_t j = 1; j <= steps; ++j) ks[j - 1] = rng.below(schedule_cap(size, j) + 1);
  return ks;
}

double schedule_sum_bound(std::size_t size) {
  const double n = static_cast<double>(size);
  return 8.0 * std::sqrt(n) * std::log(n);
}

std::size_t amplification_passes(std::size_t m) {
  const double v = m > 1 ? std::ceil(2.0 * std::log(static_cast<double>(m))) : 0.0;
  return std::max<std::size_t>(8, static_cast<std::size_t>(v));
}

std::size_t pretest_samples(std::size_t m) {
  const double v = m > 1 ? std::ceil(4.0 * std::log(static_cast<double>(m))) : 0.0;
  return std::max<std::size_t>(4, static_cast<std::size_t>(v));
}

SearchEnsemble::SearchEnsemble(std::size_t domainSize, const std::vector<TruthTable>& tables)
    : domain_(domainSize), m_(tables.size()), groupOf_(tables.size()) {
  std::map<std::vector<bool>, std::uint32_t> index;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i].size() != domainSize || tables[i].extended())
      throw std::invalid_argument("table must be over X without ⊥");
    auto [it, fresh] = index.emplace(tables[i].bits(), static_cast<std::uint32_t>(groups_.size()));
    if (fresh) groups_.push_back({dummy_extend(tables[i]), {}});
    groups_[it->second].members.push_back(static_cast<std::uint32_t>(i));
    groupOf_[i] = it->second;
  }
}

SearchEnsemble SearchEnsemble::from_groups(std::size_t domainSize, std::vector<SearchGroup> groups) {
  SearchEnsemble e;
  e.domain_ = domainSize;
  std::size_t m = 0;
  for (const auto& g : groups) m += g.members.size();
  e.m_ = m;
  e.groupOf_.assign(m, UINT32_MAX);
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (groups[gi].table.size() != domainSize || groups[gi].table.extended())
      throw std::invalid_argument("table must be over X without ⊥");
    groups[gi].table = dummy_extend(groups[gi].table);
    for (std::uint32_t c : groups[gi].members) {
      if (c >= m || e.groupOf_[c] != UINT32_MAX) throw std::invalid_argument("group members must partition 0..m-1");
      e.groupOf_[c] = static_cast<std::uint32_t>(gi);
    }
  }
  e.groups_ = std::move(groups);
  return e;
}

AmplitudeVector SearchEnsemble::state(std::size_t coordinate, std::size_t k) const {
  return grover_state(table_of(coordinate), k);
}

double SearchEnsemble::joint_success_probability(std::size_t k) const {
  double p = 1.0;
  for (const auto& g : groups_)
    p *= std::pow(grover_state(g.table, k).success_probability(g.table), static_cast<double>(g.members.size()));
  return p;
}

std::size_t SearchEnsemble::max_solution_frequency() const {
  std::size_t best = 0;
  for (std::size_t x = 0; x < domain_; ++x) {
    std::size_t f = 0;
    for (const auto& g : groups_)
      if (g.table[x]) f += g.members.size();
    best = std::max(best, f);
  }
  return best;
}

}  // namespace qclique::qsearch
