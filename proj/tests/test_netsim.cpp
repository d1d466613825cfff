#include <doctest.h>

#include "qclique/labels.hpp"
#include "qclique/network.hpp"

using namespace qclique;

namespace {

Message unit(NodeId s, NodeId d) { return Message{s, d, {1}, 1, MessageKind::Classical}; }

}  // namespace

TEST_CASE("run_round: silent round") {
  Network net(5);
  RoundEngine<int> engine(net, std::vector<int>(5, 0));
  engine.run_round("idle", [](NodeId, int&, const std::vector<Message>&) { return std::vector<Message>{}; });
  const PhaseRecord* p = net.ledger().find("idle");
  REQUIRE(p);
  CHECK(p->classicalRounds == 1);
  CHECK(p->messages == 0);
  CHECK(p->maxLinkLoad == 0);
}

TEST_CASE("run_round: one-to-all and delivery next round") {
  const std::size_t n = 6;
  Network net(n);
  RoundEngine<int> engine(net, std::vector<int>(n, 0));
  engine.run_round("send", [n](NodeId u, int&, const std::vector<Message>&) {
    std::vector<Message> out;
    if (u == 0)
      for (NodeId v = 1; v < n; ++v) out.push_back(unit(0, v));
    return out;
  });
  const PhaseRecord* p = net.ledger().find("send");
  CHECK(p->classicalRounds == 1);
  CHECK(p->messages == n - 1);
  CHECK(p->maxLinkLoad == 1);
  engine.run_round("recv", [](NodeId, int& s, const std::vector<Message>& inbox) {
    s += static_cast<int>(inbox.size());
    return std::vector<Message>{};
  });
  CHECK(engine.states()[0] == 0);
  for (NodeId v = 1; v < n; ++v) CHECK(engine.states()[v] == 1);
}

TEST_CASE("run_round: two units on one link") {
  auto handler = [](NodeId u, int&, const std::vector<Message>&) {
    std::vector<Message> out;
    if (u == 0) out = {unit(0, 1), unit(0, 1)};
    return out;
  };
  Network strict(3, NetMode::Strict);
  RoundEngine<int> e1(strict, std::vector<int>(3, 0));
  CHECK_THROWS_AS(e1.run_round("burst", handler), BandwidthViolation);
  CHECK(strict.ledger().violation_count() == 1);

  Network audit(3, NetMode::Audit);
  RoundEngine<int> e2(audit, std::vector<int>(3, 0));
  CHECK_NOTHROW(e2.run_round("burst", handler));
  CHECK(audit.ledger().violation_count() == 1);
  CHECK(audit.ledger().find("burst")->maxLinkLoad == 2);
}

TEST_CASE("oversized message is a violation") {
  Network net(3, NetMode::Audit, 4);
  Message m = unit(0, 1);
  m.sizeWords = 5;
  net.deliver_round("big", {{m}, {}, {}});
  CHECK(net.ledger().violation_count() == 1);
}

TEST_CASE("route_bulk contract") {
  const std::size_t n = 7;
  SUBCASE("all ordered pairs in two rounds") {
    Network net(n);
    std::vector<Message> all;
    for (NodeId s = 0; s < n; ++s)
      for (NodeId d = 0; d < n; ++d) all.push_back(unit(s, d));
    auto inbox = net.route_bulk("bulk", all);
    CHECK(net.ledger().find("bulk")->classicalRounds == 2);
    for (NodeId d = 0; d < n; ++d) CHECK(inbox[d].size() == n);
  }
  SUBCASE("empty set") {
    Network net(n);
    net.route_bulk("bulk", {});
    CHECK(net.ledger().find("bulk")->classicalRounds == 0);
  }
  SUBCASE("source over budget") {
    Network net(n);
    std::vector<Message> many;
    for (std::size_t i = 0; i <= n; ++i) many.push_back(unit(0, 1 + i % (n - 1)));
    CHECK_THROWS_AS(net.route_bulk("bulk", many), RoutingPreconditionError);
  }
  SUBCASE("quantum kind propagates") {
    Network net(n);
    Message m = unit(2, 3);
    m.kind = MessageKind::QuantumCharged;
    net.route_bulk("q", {m});
    CHECK(net.ledger().find("q")->quantumChargedRounds == 2);
    CHECK(net.ledger().find("q")->classicalRounds == 0);
  }
  SUBCASE("cost independent of count") {
    for (std::size_t count : {1u, 3u, 7u}) {
      Network net(n);
      std::vector<Message> msgs;
      for (NodeId s = 0; s < count; ++s) msgs.push_back(unit(s, (s + 1) % n));
      net.route_bulk("b", msgs);
      CHECK(net.ledger().find("b")->classicalRounds == 2);
    }
  }
}

TEST_CASE("route_loads batches") {
  Network net(4);
  LoadMatrix loads(4);
  loads.add(0, 1, 3);
  loads.add(0, 2, 3);
  loads.add(3, 3, 100);
  CHECK(net.route_loads("l", loads) == 4);  // Delta 6 over n 4: two batches
  LoadMatrix none(4);
  CHECK(net.route_loads("z", none) == 0);
}

TEST_CASE("broadcast cost") {
  Network net(4);
  CHECK(net.broadcast("b", {1, 3, 0, 2}) == 3);
  CHECK(net.ledger().find("b")->messages == 6 * 3);
}

TEST_CASE("ledger JSON shape") {
  Network net(3);
  net.charge("grover", MessageKind::QuantumCharged, 5);
  auto j = net.ledger().to_json();
  REQUIRE(j.size() == 1);
  CHECK(j[0]["phase"] == "grover");
  CHECK(j[0]["quantumChargedRounds"] == 5);
  CHECK(j[0]["violations"].empty());
}

TEST_CASE("label schemes") {
  SUBCASE("n = 16") {
    LabelSchemes s(16);
    CHECK(s.coarse_count() == 2);
    CHECK(s.coarse_size() == 8);
    CHECK(s.fine_count() == 4);
    CHECK(s.fine_size() == 4);
  }
  SUBCASE("n = 81") {
    LabelSchemes s(81);
    CHECK(s.coarse_count() == 3);
    CHECK(s.coarse_size() == 27);
    CHECK(s.fine_count() == 9);
    CHECK(s.fine_size() == 9);
  }
  SUBCASE("n = 10 is rejected with a padding hint") {
    CHECK_THROWS_AS(LabelSchemes(10), LabelError);
    CHECK(next_fourth_power(10) == 16);
    CHECK(next_fourth_power(81) == 81);
    CHECK(next_fourth_power(82) == 256);
  }
  SUBCASE("bijections") {
    for (std::size_t n : {1u, 16u, 81u, 256u}) {
      LabelSchemes s(n);
      std::vector<int> seenT(n, 0), seenH(n, 0);
      for (std::uint32_t u = 0; u < s.q(); ++u)
        for (std::uint32_t v = 0; v < s.q(); ++v)
          for (std::uint32_t w = 0; w < s.fine_count(); ++w) {
            NodeId id = s.triple_node({u, v, w});
            ++seenT[id];
            CHECK(s.triple_of(id) == BlockTriple{u, v, w});
            NodeId h = s.helper_node(u, v, w);
            ++seenH[h];
            std::uint32_t a, b, c;
            s.helper_of(h, a, b, c);
            CHECK((a == u && b == v && c == w));
          }
      for (std::size_t i = 0; i < n; ++i) CHECK((seenT[i] == 1 && seenH[i] == 1));
      std::vector<int> cover(n, 0);
      for (std::uint32_t b = 0; b < s.coarse_count(); ++b)
        for (Vertex v : s.coarse_members(b)) ++cover[v];
      for (std::uint32_t b = 0; b < s.fine_count(); ++b)
        for (Vertex v : s.fine_members(b)) ++cover[v];
      for (std::size_t i = 0; i < n; ++i) CHECK(cover[i] == 2);
    }
  }
}

TEST_CASE("alpha scheme") {
  CHECK(alpha_sublist_count(0, 256, 720.0) == 1);
  CHECK(alpha_sublist_count(12, 256, 720.0) == 1);  // 4096 / 3992 rounds down
  CHECK(alpha_sublist_count(13, 256, 720.0) == 2);
  AlphaScheme a(16, {{1, 0, 2}, {0, 0, 1}}, 3);
  CHECK(a.used_labels() == 6);
  CHECK(a.node({0, 0, 1}, 0) == 0);
  CHECK(a.node({1, 0, 2}, 2) == 5);
  CHECK_THROWS_AS(a.node({1, 1, 1}, 0), LabelError);
  CHECK_THROWS_AS(AlphaScheme(16, {{0, 0, 0}, {0, 0, 1}}, 9), LabelError);
}
