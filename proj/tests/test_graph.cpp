#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "gcs/enumerate.hpp"
#include "gcs/graph.hpp"
#include "gcs/graph_io.hpp"
#include "helpers.hpp"

using namespace gcs;
using gcs::testing::family;
using gcs::testing::from_text;

TEST_CASE("text format parses the 2-cycle") {
  Graph g = parse_graph("v1 v2 ; e12: v1 -> v2 ; e21: v2 -> v1");
  REQUIRE(g.vertex_count() == 2);
  REQUIRE(g.edge_count() == 2);
  CHECK(g.source(g.edge("e12")) == g.vertex("v1"));
  CHECK(g.range(g.edge("e12")) == g.vertex("v2"));
  CHECK(g.source(g.edge("e21")) == g.vertex("v2"));
  CHECK(g.range(g.edge("e21")) == g.vertex("v1"));
}

TEST_CASE("text format accepts an edgeless vertex") {
  Graph g = parse_graph("v ;");
  REQUIRE(g.vertex_count() == 1);
  REQUIRE(g.edge_count() == 0);
}

TEST_CASE("parser rejects bad input") {
  CHECK_THROWS_AS(parse_graph("v1 ; e: v1 -> v9"), UnknownIdError); // dangling endpoint
  CHECK_THROWS_AS(parse_graph("v v ;"), UnknownIdError);            // duplicate vertex
  CHECK_THROWS_AS(parse_graph("v ; e: v -> v ; e: v -> v"), UnknownIdError);
  CHECK_THROWS_AS(parse_graph("v1 v2 ; e12 v1 -> v2"), ParseError); // missing colon
  CHECK_THROWS_AS(parse_graph("v1 v2 ; e12: v1 v2"), ParseError);   // missing arrow
  CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("adjacency matrices") {
  CHECK(adjacency_matrix(*family(Family::C2, 1)) ==
        std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}});
  CHECK(adjacency_matrix(*family(Family::P2, 1)) ==
        std::vector<std::vector<std::int64_t>>{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(adjacency_matrix(*family(Family::Ln, 2)) ==
        std::vector<std::vector<std::int64_t>>{{2}});
}

TEST_CASE("structural predicates on the named graphs") {
  SECTION("P2") {
    auto g = family(Family::P2, 1);
    auto s = structural_predicates(*g);
    CHECK(s.sinks == std::vector<std::size_t>{g->vertex("v3")});
    CHECK(s.rigid_sources == std::vector<std::size_t>{g->vertex("v1")});
    CHECK(s.connected);
    CHECK(s.has_path_of_length_two);
    CHECK(s.isolated.empty());
  }
  SECTION("three disjoint loops") {
    auto g = family(Family::DisjointLoops, 3);
    auto s = structural_predicates(*g);
    CHECK(s.sinks.empty());
    CHECK(s.rigid_sources.empty());
    CHECK_FALSE(s.connected);
    CHECK(s.loops.size() == 3);
  }
  SECTION("So3") {
    auto g = family(Family::Son, 3);
    auto s = structural_predicates(*g);
    CHECK(s.sinks.size() == 3);
    CHECK(s.rigid_sources == std::vector<std::size_t>{g->vertex("v")});
    CHECK(s.connected);
    CHECK_FALSE(s.has_path_of_length_two);
  }
}

TEST_CASE("path enumeration counts") {
  auto count_by_len = [](const Graph& g, std::size_t max_len) {
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (const Path& p : enumerate_paths(g, max_len)) ++counts[p.length()];
    return counts;
  };
  SECTION("C2 up to length 2") {
    auto g = family(Family::C2, 1);
    CHECK(count_by_len(*g, 2) == std::vector<std::size_t>{2, 2, 2});
    std::set<Path> level2;
    for (const Path& p : enumerate_paths(*g, 2)) {
      if (p.length() == 2) level2.insert(p);
    }
    const std::size_t e12 = g->edge("e12"), e21 = g->edge("e21");
    CHECK(level2 == std::set<Path>{make_path(*g, {e12, e21}), make_path(*g, {e21, e12})});
  }
  SECTION("So3 has no length-2 paths") {
    CHECK(count_by_len(*family(Family::Son, 3), 2) == std::vector<std::size_t>{4, 3, 0});
  }
  SECTION("single loop") {
    CHECK(count_by_len(*family(Family::Ln, 1), 3) == std::vector<std::size_t>{1, 1, 1, 1});
  }
}

TEST_CASE("every enumerated path is a path") {
  for (auto g : {family(Family::C2, 1), family(Family::Son, 3), family(Family::Ln, 3),
                 gcs::testing::graph_T(), gcs::testing::branching_graph()}) {
    for (const Path& p : enumerate_paths(*g, 3)) {
      CHECK(is_valid_path(*g, p));
    }
  }
}

TEST_CASE("named families") {
  auto l3 = family(Family::Ln, 3);
  CHECK(l3->vertex_count() == 1);
  CHECK(l3->edge_count() == 3);
  for (std::size_t e = 0; e < 3; ++e) CHECK(l3->is_loop(e));

  auto so3 = family(Family::Son, 3);
  CHECK(so3->vertex_count() == 4);
  CHECK(so3->edge_count() == 3);
  for (std::size_t e = 0; e < 3; ++e) {
    CHECK(so3->source(e) == so3->vertex("v"));
    CHECK(so3->is_sink(so3->range(e)));
  }

  auto k3 = family(Family::Kn, 3);
  CHECK(k3->vertex_count() == 3);
  CHECK(k3->edge_count() == 6);

  auto star = family(Family::IntoStar, 4);
  CHECK(star->vertex_count() == 5);
  CHECK(star->edge_count() == 4);
  for (std::size_t e = 0; e < 4; ++e) CHECK(star->range(e) == star->vertex("v"));

  CHECK(family(Family::KnComplement, 3)->edge_count() == 0);
  CHECK_THROWS_AS(make_family(Family::Ln, 0), Error);
}

TEST_CASE("graph enumeration counts") {
  auto consume = [](GraphEnumerator stream) {
    std::vector<Graph> out;
    while (auto g = stream.next()) out.push_back(std::move(*g));
    return out;
  };

  SECTION("one vertex, one edge") {
    auto graphs = consume(GraphEnumerator(1, 1, true));
    REQUIRE(graphs.size() == 1);
    CHECK(graphs[0].is_loop(0));
  }

  SECTION("bounds up to two vertices, one edge") {
    // The single loop on one vertex plus the two single-edge graphs on two
    // vertices; a loop on one of two vertices isolates the other.
    auto graphs = consume(GraphEnumerator(2, 1, true));
    REQUIRE(graphs.size() == 3);
    CHECK(graphs[0].vertex_count() == 1);
    CHECK(graphs[1].vertex_count() == 2);
    CHECK(graphs[2].vertex_count() == 2);
    CHECK_FALSE(graphs[1].is_loop(0));
    CHECK_FALSE(graphs[2].is_loop(0));
  }

  SECTION("unfiltered count matches the closed form") {
    // sum over nv in 1..2, ne in 1..2 of (nv^2)^ne = 1 + 1 + 4 + 16.
    auto graphs = consume(GraphEnumerator(2, 2, false));
    std::size_t expected = 0;
    for (std::size_t nv = 1; nv <= 2; ++nv) {
      for (std::size_t ne = 1; ne <= 2; ++ne) {
        std::size_t assignments = 1;
        for (std::size_t i = 0; i < ne; ++i) assignments *= nv * nv;
        expected += assignments;
      }
    }
    CHECK(expected == 22);
    CHECK(graphs.size() == expected);
  }

  SECTION("budget guard") {
    CHECK_THROWS_AS(GraphEnumerator(9, 9, true), BudgetError);
  }
}

TEST_CASE("a vertex is neither sink nor rigid source exactly when a length-2 path exists") {
  GraphEnumerator stream(3, 3, false);
  std::size_t seen = 0;
  while (auto g = stream.next()) {
    ++seen;
    bool mixed_vertex = false;
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      if (!g->is_sink(v) && !g->is_rigid_source(v)) mixed_vertex = true;
    }
    bool two_step = false;
    for (std::size_t e = 0; e < g->edge_count(); ++e) {
      for (std::size_t f = 0; f < g->edge_count(); ++f) {
        if (g->range(e) == g->source(f)) two_step = true;
      }
    }
    REQUIRE(mixed_vertex == two_step);
    REQUIRE(structural_predicates(*g).has_path_of_length_two == two_step);
  }
  CHECK(seen > 800); // 3 + 84 + 819
}

TEST_CASE("adjacency row and column sums are the degrees") {
  GraphEnumerator stream(3, 2, false);
  while (auto g = stream.next()) {
    auto a = adjacency_matrix(*g);
    for (std::size_t v = 0; v < g->vertex_count(); ++v) {
      std::int64_t row = 0, col = 0;
      for (std::size_t w = 0; w < g->vertex_count(); ++w) {
        row += a[v][w];
        col += a[w][v];
      }
      REQUIRE(row == static_cast<std::int64_t>(g->outdegree(v)));
      REQUIRE(col == static_cast<std::int64_t>(g->indegree(v)));
    }
  }
}

TEST_CASE("serialization round-trips bit-exactly") {
  std::vector<GraphPtr> corpus = {family(Family::C2, 1), family(Family::P2, 1),
                                  family(Family::Son, 3), family(Family::Ln, 4),
                                  family(Family::Kn, 3),  gcs::testing::graph_Tprime(),
                                  from_text("v ;")};
  GraphEnumerator stream(2, 2, false);
  while (auto g = stream.next()) corpus.push_back(gcs::testing::share(std::move(*g)));

  for (const auto& g : corpus) {
    const std::string text = serialize_graph_text(*g);
    CHECK(parse_graph(text).structurally_equal(*g));
    CHECK(serialize_graph_text(parse_graph(text)) == text);

    const std::string json = serialize_graph_json(*g);
    CHECK(parse_graph(json).structurally_equal(*g));
    CHECK(serialize_graph_json(parse_graph(json)) == json);
  }
}

TEST_CASE("canonical text form is stable") {
  CHECK(serialize_graph_text(*family(Family::C2, 1)) ==
        "v1 v2 ; e12: v1 -> v2 ; e21: v2 -> v1");
  CHECK(serialize_graph_text(parse_graph("v ;")) == "v ;");
}
