#include "qclique/ledger.hpp"

#include <algorithm>

namespace qclique {

PhaseRecord& RoundLedger::phase(const std::string& name) {
  auto it = index_.find(name);
  if (it != index_.end()) return phases_[it->second];
  index_.emplace(name, phases_.size());
  PhaseRecord rec;
  rec.phase = name;
  phases_.push_back(std::move(rec));
  return phases_.back();
}

const PhaseRecord* RoundLedger::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &phases_[it->second];
}

void RoundLedger::charge(const std::string& name, MessageKind kind, std::uint64_t rounds) {
  PhaseRecord& p = phase(name);
  if (kind == MessageKind::Classical) {
    p.classicalRounds += rounds;
  } else {
    p.quantumChargedRounds += rounds;
  }
}

void RoundLedger::add_traffic(const std::string& name, std::uint64_t messages, std::uint64_t linkLoad) {
  PhaseRecord& p = phase(name);
  p.messages += messages;
  p.maxLinkLoad = std::max(p.maxLinkLoad, linkLoad);
}

void RoundLedger::record_violation(const std::string& name, const std::string& what) {
  phase(name).violations.push_back(what);
}

std::uint64_t RoundLedger::classical_rounds() const {
  std::uint64_t total = 0;
  for (const auto& p : phases_) total += p.classicalRounds;
  return total;
}

std::uint64_t RoundLedger::quantum_charged_rounds() const {
  std::uint64_t total = 0;
  for (const auto& p : phases_) total += p.quantumChargedRounds;
  return total;
}

std::uint64_t RoundLedger::messages() const {
  std::uint64_t total = 0;
  for (const auto& p : phases_) total += p.messages;
  return total;
}

std::uint64_t RoundLedger::max_link_load() const {
  std::uint64_t best = 0;
  for (const auto& p : phases_) best = std::max(best, p.maxLinkLoad);
  return best;
}

std::size_t RoundLedger::violation_count() const {
  std::size_t total = 0;
  for (const auto& p : phases_) total += p.violations.size();
  return total;
}

void RoundLedger::absorb(const RoundLedger& other, const std::string& prefix) {
  for (const auto& src : other.phases_) {
    PhaseRecord& dst = phase(prefix.empty() ? src.phase : prefix + "/" + src.phase);
    dst.classicalRounds += src.classicalRounds;
    dst.quantumChargedRounds += src.quantumChargedRounds;
    dst.messages += src.messages;
    dst.maxLinkLoad = std::max(dst.maxLinkLoad, src.maxLinkLoad);
    dst.violations.insert(dst.violations.end(), src.violations.begin(), src.violations.end());
  }
}

nlohmann::json RoundLedger::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : phases_) {
    out.push_back({{"phase", p.phase},
                   {"classicalRounds", p.classicalRounds},
                   {"quantumChargedRounds", p.quantumChargedRounds},
                   {"messages", p.messages},
                   {"maxLinkLoad", p.maxLinkLoad},
                   {"violations", p.violations}});
  }
  return out;
}

}  // namespace qclique
