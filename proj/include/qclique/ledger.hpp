#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace qclique {

enum class MessageKind { Classical, QuantumCharged };

struct PhaseRecord {
  std::string phase;
  std::uint64_t classicalRounds = 0;
  std::uint64_t quantumChargedRounds = 0;
  std::uint64_t messages = 0;
  std::uint64_t maxLinkLoad = 0;
  std::vector<std::string> violations;
};

/// Per-phase cost counters. Phases keep their first-seen order so reports are
/// stable. Counters only ever grow.
class RoundLedger {
 public:
  PhaseRecord& phase(const std::string& name);
  const PhaseRecord* find(const std::string& name) const;
  const std::vector<PhaseRecord>& phases() const { return phases_; }

  void charge(const std::string& name, MessageKind kind, std::uint64_t rounds);
  void add_traffic(const std::string& name, std::uint64_t messages, std::uint64_t linkLoad);
  void record_violation(const std::string& name, const std::string& what);

  std::uint64_t classical_rounds() const;
  std::uint64_t quantum_charged_rounds() const;
  std::uint64_t total_rounds() const { return classical_rounds() + quantum_charged_rounds(); }
  std::uint64_t messages() const;
  std::uint64_t max_link_load() const;
  std::size_t violation_count() const;

  /// Adds every phase of `other`, optionally renamed as prefix + "/" + phase.
  void absorb(const RoundLedger& other, const std::string& prefix = "");

  nlohmann::json to_json() const;

 private:
  std::vector<PhaseRecord> phases_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace qclique
