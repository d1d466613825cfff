#include <doctest.h>

#include "qclique/dist_matrix.hpp"
#include "qclique/graph_io.hpp"
#include "qclique/instances.hpp"
#include "qclique/oracles.hpp"
#include "qclique/tripartite.hpp"

using namespace qclique;

namespace {

const ExtWeight INF = ExtWeight::inf();
ExtWeight F(std::int64_t v) { return ExtWeight::finite(v); }

}  // namespace

TEST_CASE("ExtWeight arithmetic") {
  CHECK((INF + F(3)).is_inf());
  CHECK((F(3) + INF).is_inf());
  CHECK(ext_min(INF, F(-2)) == F(-2));
  CHECK(ext_min(F(7), INF) == F(7));
  CHECK(F(2) + F(-5) == F(-3));
  CHECK(F(-1) < F(0));
  CHECK(F(ExtWeight::kMaxFinite) < INF);
  CHECK_THROWS_AS(F(ExtWeight::kMaxFinite) + F(1), std::overflow_error);
  CHECK_THROWS_AS(ExtWeight::finite(ExtWeight::kMaxFinite + 1), std::overflow_error);
  CHECK_THROWS(INF.value());
  CHECK_THROWS(-INF);
  CHECK(INF.to_string() == "INF");
}

TEST_CASE("graph containers reject self-loops and bad endpoints") {
  WeightedDigraph g(3);
  CHECK_THROWS_AS(g.set_arc(1, 1, 0), GraphError);
  CHECK_THROWS_AS(g.set_arc(0, 3, 0), GraphError);
  g.set_arc(0, 2, -4);
  CHECK(g.arc(0, 2) == -4);
  CHECK_FALSE(g.arc(2, 0).has_value());

  UndirectedWeightedGraph u(3);
  u.set_edge(2, 0, 5);
  CHECK(u.weight(0, 2) == F(5));
  CHECK(u.weight(2, 0) == F(5));
  CHECK(u.edge_count() == 1);
  u.remove_edge(0, 2);
  CHECK(u.edge_count() == 0);
  CHECK_THROWS_AS(u.set_edge(1, 1, 0), GraphError);

  PairSet s(4);
  s.insert(3, 1);
  CHECK(s.contains(1, 3));
  CHECK_FALSE(s.contains(2, 2));
  CHECK_THROWS_AS(s.insert(2, 2), GraphError);
  CHECK_THROWS_AS(s.insert(0, 4), GraphError);
  CHECK(PairSet::all_pairs(4).size() == 6);
}

TEST_CASE("min-plus product examples") {
  SUBCASE("identity is neutral") {
    Rng rng(11);
    DistMatrix b = instances::random_matrix(5, 9, 0.3, rng);
    CHECK(min_plus_product_oracle(DistMatrix::identity(5), b) == b);
    CHECK(min_plus_product_oracle(b, DistMatrix::identity(5)) == b);
  }
  SUBCASE("2x2 hand case") {
    DistMatrix a = DistMatrix::from_rows({{F(0), F(3)}, {INF, F(0)}});
    DistMatrix b = DistMatrix::from_rows({{F(0), F(1)}, {INF, F(0)}});
    CHECK(min_plus_product_oracle(a, b) == DistMatrix::from_rows({{F(0), F(1)}, {INF, F(0)}}));
  }
  SUBCASE("fully INF row stays INF") {
    DistMatrix a = DistMatrix::from_rows({{INF, INF}, {F(1), F(0)}});
    DistMatrix b = DistMatrix::from_rows({{F(2), F(3)}, {F(4), F(5)}});
    DistMatrix c = min_plus_product_oracle(a, b);
    CHECK(c.at(0, 0).is_inf());
    CHECK(c.at(0, 1).is_inf());
    CHECK(c.at(1, 0) == F(3));
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(min_plus_product_oracle(DistMatrix::identity(2), DistMatrix::identity(3)), DimensionError);
  }
}

TEST_CASE("min-plus product is associative") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(8);
    DistMatrix a = instances::random_matrix(n, 20, 0.25, rng);
    DistMatrix b = instances::random_matrix(n, 20, 0.25, rng);
    DistMatrix c = instances::random_matrix(n, 20, 0.25, rng);
    CHECK(min_plus_product_oracle(min_plus_product_oracle(a, b), c) ==
          min_plus_product_oracle(a, min_plus_product_oracle(b, c)));
  }
}

TEST_CASE("encode_graph_matrix") {
  CHECK(encode_graph_matrix(WeightedDigraph(2)) == DistMatrix::from_rows({{F(0), INF}, {INF, F(0)}}));

  WeightedDigraph one(3);
  one.set_arc(1, 2, 5);
  DistMatrix m = encode_graph_matrix(one);
  CHECK(m.at(1, 2) == F(5));
  CHECK(m.at(2, 1).is_inf());
  CHECK(m.at(0, 0) == F(0));

  WeightedDigraph full(3);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex v = 0; v < 3; ++v)
      if (u != v) full.set_arc(u, v, 1);
  DistMatrix f = encode_graph_matrix(full);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(f.at(i, j) == F(i == j ? 0 : 1));
}

TEST_CASE("n-1 products of A_G agree with Floyd-Warshall") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Rng rng(1000 + seed);
    const std::size_t n = 2 + rng.below(10);
    WeightedDigraph g = instances::random_digraph(n, 6, 0.4, rng);
    DistMatrix ag = encode_graph_matrix(g);
    DistMatrix power = ag;
    for (std::size_t t = 1; t + 1 < n; ++t) power = min_plus_product_oracle(power, ag);
    CHECK(power == oracles::floyd_warshall(g));
  }
}

TEST_CASE("tripartite instance examples") {
  SUBCASE("no K-side edges") {
    DistMatrix a = DistMatrix::from_rows({{INF, INF}, {INF, INF}});
    DistMatrix d = DistMatrix::from_rows({{F(0), F(0)}, {F(0), F(0)}});
    TripartiteInstance inst = build_tripartite_instance(a, a, d);
    CHECK(inst.pairs.empty());
    CHECK(oracles::brute_find_edges(inst.graph, PairSet::all_pairs(6)).empty());
  }
  SUBCASE("single triangle just below zero") {
    DistMatrix a = DistMatrix::from_rows({{F(2)}});
    DistMatrix b = DistMatrix::from_rows({{F(3)}});
    TripartiteInstance inst = build_tripartite_instance(a, b, DistMatrix::from_rows({{F(6)}}));
    CHECK(inst.graph.vertex_count() == 3);
    CHECK(inst.graph.weight(0, 1) == F(-6));
    CHECK(oracles::brute_find_edges(inst.graph, inst.pairs).contains(0, 1));
  }
  SUBCASE("sum exactly zero is not negative") {
    DistMatrix a = DistMatrix::from_rows({{F(2)}});
    DistMatrix b = DistMatrix::from_rows({{F(3)}});
    TripartiteInstance inst = build_tripartite_instance(a, b, DistMatrix::from_rows({{F(5)}}));
    CHECK(oracles::brute_find_edges(inst.graph, inst.pairs).empty());
  }
  SUBCASE("host padding") {
    DistMatrix a = DistMatrix::from_rows({{F(2)}});
    TripartiteInstance inst = build_tripartite_instance(a, a, a, 16);
    CHECK(inst.graph.vertex_count() == 16);
    CHECK_THROWS_AS(build_tripartite_instance(a, a, a, 2), DimensionError);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(build_tripartite_instance(DistMatrix::identity(2), DistMatrix::identity(3),
                                              DistMatrix::identity(2)),
                    DimensionError);
  }
}

TEST_CASE("tripartite negative triangles are exactly the pairs with min < D") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(5000 + seed);
    const std::size_t n = 1 + rng.below(7);
    DistMatrix a = instances::random_matrix(n, 8, 0.3, rng);
    DistMatrix b = instances::random_matrix(n, 8, 0.3, rng);
    DistMatrix d(n, 8);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d.set(i, j, F(rng.between(-8, 8)));
    TripartiteInstance inst = build_tripartite_instance(a, b, d);
    PairSet found = oracles::brute_find_edges(inst.graph, PairSet::all_pairs(3 * n));
    DistMatrix c = min_plus_product_oracle(a, b);
    PairSet expected(3 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c.at(i, j) < d.at(i, j)) expected.insert(inst.i_vertex(i), inst.j_vertex(j));
    // Only I-J pairs can close a triangle through K; A-side and B-side pairs
    // are flagged too, so restrict the comparison to I x J.
    PairSet ij(3 * n);
    for (const VertexPair& p : found)
      if (p.lo < n && p.hi >= n && p.hi < 2 * n) ij.insert(p);
    CHECK(ij == expected);
    for (const VertexPair& p : expected) CHECK(inst.pairs.contains(p));
  }
}

TEST_CASE("edge-list parsing") {
  EdgeList g = parse_graph("2 1 directed\n0 1 5\n");
  CHECK(g.directed);
  CHECK(g.to_digraph().arc(0, 1) == 5);

  CHECK_THROWS_AS(parse_graph("2 1 directed\n0 0 5"), ParseError);
  try {
    parse_graph("3 2 undirected\n0 1 2\n# note\n1 x 4\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_graph("2 1 directed\n0 2 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("2 2 directed\n0 1 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("2 2 undirected\n0 1 1\n1 0 3"), ParseError);
  CHECK_THROWS_AS(parse_graph("2 1 sideways\n0 1 1"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);

  const std::string messy = "# header comment\n4 3 undirected\n3 1 -2\n\n0 2 7\n2 1 1\n";
  const std::string canonical = serialize_graph(parse_graph(messy));
  CHECK(canonical == "4 3 undirected\n0 2 7\n1 2 1\n1 3 -2\n");
  CHECK(serialize_graph(parse_graph(canonical)) == canonical);

  Rng rng(3);
  WeightedDigraph d = instances::random_digraph(7, 10, 0.5, rng);
  CHECK(parse_graph(serialize_graph(edge_list_of(d))).to_digraph() == d);
}

TEST_CASE("matrix JSON round trip") {
  DistMatrix m = DistMatrix::from_rows({{F(0), INF}, {F(-3), F(0)}});
  nlohmann::json j = matrix_to_json(m);
  CHECK(j.dump() == R"([[0,"INF"],[-3,0]])");
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS(matrix_from_json(nlohmann::json::parse(R"([[0,"inf"],[1,0]])")));
}

TEST_CASE("random digraphs have no negative cycles and respect W") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    WeightedDigraph g = instances::random_digraph(12, 16, 0.5, rng);
    CHECK(g.max_abs_weight() <= 16);
    CHECK_NOTHROW(oracles::floyd_warshall(g));
  }
}
