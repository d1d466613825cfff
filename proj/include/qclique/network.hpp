#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qclique/ledger.hpp"

namespace qclique {

using NodeId = std::uint32_t;

/// One message unit: at most `bandwidthWords` words, enough for a
/// (vertex, vertex, weight) triple plus a tag.
struct Message {
  NodeId src = 0;
  NodeId dst = 0;
  std::vector<std::int64_t> payload;
  std::size_t sizeWords = 1;
  MessageKind kind = MessageKind::Classical;
};

enum class NetMode { Strict, Audit };

class BandwidthViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a bulk routing request breaks the at-most-n-per-node contract.
class RoutingPreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sparse count of message units per ordered (src, dst) pair.
class LoadMatrix {
 public:
  explicit LoadMatrix(std::size_t n) : n_(n), out_(n, 0), in_(n, 0) {}

  void add(NodeId src, NodeId dst, std::uint64_t units);

  std::size_t size() const { return n_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t max_out() const;
  std::uint64_t max_in() const;
  std::uint64_t out_of(NodeId u) const { return out_[u]; }
  std::uint64_t in_of(NodeId u) const { return in_[u]; }

 private:
  std::size_t n_;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

/// The CONGEST-CLIQUE cost model over n nodes: a synchronous round engine
/// plus the two-round bulk routing contract for pre-announced traffic.
class Network {
 public:
  explicit Network(std::size_t n, NetMode mode = NetMode::Strict, std::size_t bandwidthWords = 4);

  std::size_t size() const { return n_; }
  NetMode mode() const { return mode_; }
  std::size_t bandwidth_words() const { return bandwidth_; }
  RoundLedger& ledger() { return ledger_; }
  const RoundLedger& ledger() const { return ledger_; }

  /// Delivers pre-announced messages. If no node sends or receives more than
  /// n units the delivery costs exactly 2 rounds (0 when empty); otherwise
  /// throws RoutingPreconditionError. Returns the inbox of every node.
  std::vector<std::vector<Message>> route_bulk(const std::string& phase, std::vector<Message> messages);

  /// Charges a batch of pre-announced traffic given only its counts: with
  /// Delta the largest per-node send or receive total, the batch splits into
  /// ceil(Delta / n) bulk deliveries. Self-addressed units are local and free.
  /// Returns the rounds charged.
  std::uint64_t route_loads(const std::string& phase, const LoadMatrix& loads,
                            MessageKind kind = MessageKind::Classical);

  /// Every node u sends words[u] units to all other nodes, one unit per round.
  std::uint64_t broadcast(const std::string& phase, const std::vector<std::uint64_t>& words,
                          MessageKind kind = MessageKind::Classical);

  /// Direct charge for costs computed elsewhere (e.g. Grover iterations).
  void charge(const std::string& phase, MessageKind kind, std::uint64_t rounds) {
    ledger_.charge(phase, kind, rounds);
  }

  /// Records a violation; throws BandwidthViolation in strict mode.
  void violation(const std::string& phase, const std::string& what);

  /// Delivers one synchronous round of point-to-point messages, enforcing at
  /// most one unit per ordered pair. Returns the inboxes.
  std::vector<std::vector<Message>> deliver_round(const std::string& phase,
                                                  const std::vector<std::vector<Message>>& outboxes);

 private:
  void check_message(const std::string& phase, const Message& m);

  std::size_t n_;
  NetMode mode_;
  std::size_t bandwidth_;
  RoundLedger ledger_;
};

/// Round-by-round executor: each node's handler maps (state, inbox) to the
/// messages it sends this round; they arrive in the next round's inbox.
template <typename State>
class RoundEngine {
 public:
  using Handler = std::function<std::vector<Message>(NodeId, State&, const std::vector<Message>&)>;

  RoundEngine(Network& net, std::vector<State> initial)
      : net_(net), states_(std::move(initial)), inboxes_(net.size()) {
    if (states_.size() != net.size()) throw std::invalid_argument("one state per node required");
  }

  void run_round(const std::string& phase, const Handler& handler) {
    std::vector<std::vector<Message>> outboxes(net_.size());
    for (NodeId u = 0; u < net_.size(); ++u) outboxes[u] = handler(u, states_[u], inboxes_[u]);
    inboxes_ = net_.deliver_round(phase, outboxes);
  }

  const std::vector<State>& states() const { return states_; }
  const std::vector<Message>& inbox(NodeId u) const { return inboxes_[u]; }

 private:
  Network& net_;
  std::vector<State> states_;
  std::vector<std::vector<Message>> inboxes_;
};

}  // namespace qclique
