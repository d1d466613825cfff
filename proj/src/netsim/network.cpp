#include "qclique/network.hpp"

#include <algorithm>
#include <map>

namespace qclique {

void LoadMatrix::add(NodeId src, NodeId dst, std::uint64_t units) {
  if (src >= n_ || dst >= n_) throw std::out_of_range("load endpoint out of range");
  if (src == dst || units == 0) return;
  out_[src] += units;
  in_[dst] += units;
  total_ += units;
}

std::uint64_t LoadMatrix::max_out() const { return *std::max_element(out_.begin(), out_.end()); }
std::uint64_t LoadMatrix::max_in() const { return *std::max_element(in_.begin(), in_.end()); }

Network::Network(std::size_t n, NetMode mode, std::size_t bandwidthWords)
    : n_(n), mode_(mode), bandwidth_(bandwidthWords) {
  if (n == 0) throw std::invalid_argument("network needs at least one node");
  if (bandwidthWords == 0) throw std::invalid_argument("bandwidth must be positive");
}

void Network::violation(const std::string& phase, const std::string& what) {
  ledger_.record_violation(phase, what);
  if (mode_ == NetMode::Strict) throw BandwidthViolation(phase + ": " + what);
}

void Network::check_message(const std::string& phase, const Message& m) {
  if (m.src >= n_ || m.dst >= n_) throw std::out_of_range("message endpoint out of range");
  if (m.sizeWords == 0 || m.sizeWords > bandwidth_) {
    violation(phase, "message " + std::to_string(m.src) + "->" + std::to_string(m.dst) + " has " +
                         std::to_string(m.sizeWords) + " words, bandwidth is " + std::to_string(bandwidth_));
  }
}

std::vector<std::vector<Message>> Network::route_bulk(const std::string& phase, std::vector<Message> messages) {
  std::vector<std::vector<Message>> inboxes(n_);
  ledger_.phase(phase);
  if (messages.empty()) return inboxes;

  std::vector<std::uint64_t> out(n_, 0), in(n_, 0);
  bool anyQuantum = false;
  std::uint64_t remote = 0;
  for (const Message& m : messages) {
    check_message(phase, m);
    anyQuantum = anyQuantum || m.kind == MessageKind::QuantumCharged;
    if (m.src == m.dst) continue;
    ++out[m.src];
    ++in[m.dst];
    ++remote;
  }
  for (NodeId u = 0; u < n_; ++u) {
    if (out[u] > n_ || in[u] > n_) {
      throw RoutingPreconditionError(phase + ": node " + std::to_string(u) + " sends " + std::to_string(out[u]) +
                                     " and receives " + std::to_string(in[u]) + " units, limit is " +
                                     std::to_string(n_));
    }
  }
  ledger_.charge(phase, anyQuantum ? MessageKind::QuantumCharged : MessageKind::Classical, 2);
  ledger_.add_traffic(phase, remote, remote ? 1 : 0);
  for (Message& m : messages) inboxes[m.dst].push_back(std::move(m));
  return inboxes;
}

std::uint64_t Network::route_loads(const std::string& phase, const LoadMatrix& loads, MessageKind kind) {
  if (loads.size() != n_) throw std::invalid_argument("load matrix size does not match network");
  ledger_.phase(phase);
  const std::uint64_t delta = std::max(loads.max_out(), loads.max_in());
  if (delta == 0) return 0;
  // A bipartite multigraph of max degree Delta splits into Delta matchings;
  // grouping n matchings at a time gives batches that each meet the
  // at-most-n-per-node condition of bulk routing.
  const std::uint64_t batches = (delta + n_ - 1) / n_;
  const std::uint64_t rounds = 2 * batches;
  ledger_.charge(phase, kind, rounds);
  ledger_.add_traffic(phase, loads.total(), 1);
  return rounds;
}

std::uint64_t Network::broadcast(const std::string& phase, const std::vector<std::uint64_t>& words,
                                 MessageKind kind) {
  if (words.size() != n_) throw std::invalid_argument("one broadcast size per node required");
  ledger_.phase(phase);
  const std::uint64_t rounds = *std::max_element(words.begin(), words.end());
  std::uint64_t messages = 0;
  for (std::uint64_t w : words) messages += w * (n_ - 1);
  if (rounds == 0) return 0;
  ledger_.charge(phase, kind, rounds);
  ledger_.add_traffic(phase, messages, n_ > 1 ? 1 : 0);
  return rounds;
}

std::vector<std::vector<Message>> Network::deliver_round(const std::string& phase,
                                                         const std::vector<std::vector<Message>>& outboxes) {
  if (outboxes.size() != n_) throw std::invalid_argument("one outbox per node required");
  std::vector<std::vector<Message>> inboxes(n_);
  std::map<std::pair<NodeId, NodeId>, std::uint64_t> link;
  std::uint64_t messages = 0;
  bool anyQuantum = false;
  for (NodeId u = 0; u < n_; ++u) {
    for (const Message& m : outboxes[u]) {
      if (m.src != u) throw std::invalid_argument("node " + std::to_string(u) + " forged a message source");
      check_message(phase, m);
      anyQuantum = anyQuantum || m.kind == MessageKind::QuantumCharged;
      if (m.dst != u) {
        ++messages;
        ++link[{m.src, m.dst}];
      }
    }
  }
  std::uint64_t maxLoad = 0;
  for (const auto& [uv, load] : link) maxLoad = std::max(maxLoad, load);
  ledger_.charge(phase, anyQuantum ? MessageKind::QuantumCharged : MessageKind::Classical, 1);
  ledger_.add_traffic(phase, messages, maxLoad);
  for (const auto& [uv, load] : link) {
    if (load > 1) {
      violation(phase, std::to_string(load) + " units on link " + std::to_string(uv.first) + "->" +
                           std::to_string(uv.second) + " in one round");
    }
  }
  for (const auto& box : outboxes) {
    for (const Message& m : box) inboxes[m.dst].push_back(m);
  }
  return inboxes;
}

}  // namespace qclique
