#include <doctest.h>

#include <numeric>
#include <random>

#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/graph.hpp"
#include "graphmodel/text_format.hpp"
#include "oracles.hpp"

using namespace graphmodel;

namespace {

Graph plus(const Graph& a, const Graph& b) { return disjoint_union(a, b); }

std::vector<Graph> small_corpus() { return enumerate_graphs_up_to(3); }

}  // namespace

TEST_CASE("build normalizes and validates") {
  CHECK(Graph::build(0, {}) == named::empty());
  CHECK(Graph::build(1, {{0, 0}}) == named::loop());
  const Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3 == named::complete(3));
  CHECK(k3.edge_count() == 3);
  CHECK(Graph::build(2, {{1, 0}, {0, 1}}) == named::edge());
  CHECK_THROWS_AS(Graph::build(2, {{0, 2}}), InvalidInput);
  CHECK_THROWS_AS(Graph::build(-1, {}), InvalidInput);
  CHECK(named::loop().has_loop(0));
  CHECK(named::omega2().loop_count() == 2);
  CHECK(named::grotzsch().vertex_count() == 11);
  CHECK(named::grotzsch().edge_count() == 20);
}

TEST_CASE("adjacency is symmetric") {
  for (const auto& g : enumerate_graphs(4))
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
}

TEST_CASE("isomorphism examples") {
  const Graph c4 = named::cycle(4);
  const Graph rotated = oracle::relabel(c4, {1, 2, 3, 0});
  auto bij = is_isomorphic(c4, rotated);
  REQUIRE(bij);
  CHECK(oracle::is_hom(c4, rotated, *bij));
  CHECK_FALSE(is_isomorphic(c4, plus(named::edge(), named::edge())));
  CHECK_FALSE(is_isomorphic(named::loop(), named::point()));
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  const auto corpus = enumerate_graphs_up_to(3);
  for (const auto& g : corpus)
    for (const auto& h : corpus) CHECK(is_isomorphic(g, h).has_value() == oracle::iso(g, h).has_value());

  std::mt19937 rng(7);
  for (const auto& g : enumerate_graphs(5)) {
    std::vector<Vertex> p(5);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const Graph h = oracle::relabel(g, p);
    auto bij = is_isomorphic(g, h);
    REQUIRE(bij);
    CHECK(oracle::is_hom(g, h, *bij));
    CHECK(canonical_form(g).graph == canonical_form(h).graph);
  }
}

TEST_CASE("canonical form") {
  const auto four = enumerate_graphs(4);
  for (const auto& g : four) {
    const auto cf = canonical_form(g);
    CHECK(canonical_form(cf.graph).graph == cf.graph);
    CHECK(cf.graph == g);  // enumerated graphs are canonical
    REQUIRE(cf.relabeling.size() == static_cast<std::size_t>(g.vertex_count()));
    CHECK(oracle::relabel(g, cf.relabeling) == cf.graph);
  }
  for (std::size_t i = 0; i < four.size(); ++i)
    for (std::size_t j = i + 1; j < four.size(); ++j) {
      CHECK_FALSE(four[i] == four[j]);
      CHECK(canonical_less(four[i], four[j]) != canonical_less(four[j], four[i]));
    }
}

TEST_CASE("enumeration counts match Burnside") {
  CHECK(enumerate_graphs(0).size() == 1);
  CHECK(enumerate_graphs(1).size() == 2);
  CHECK(enumerate_graphs(2).size() == 6);
  CHECK(enumerate_graphs(3).size() == 20);
  for (int n = 0; n <= 4; ++n) CHECK(enumerate_graphs(n).size() == oracle::burnside_count(n));
  CHECK(enumerate_graphs_up_to(3).size() == 29);
  CHECK_THROWS_AS(enumerate_graphs(6), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_graphs(9, 9), BudgetExceeded);
}

TEST_CASE("connected components") {
  CHECK(connected_components(plus(named::edge(), named::point())).blocks.size() == 2);
  CHECK(connected_components(named::cycle(5)).blocks.size() == 1);
  CHECK(connected_components(named::empty()).blocks.empty());
  for (const auto& g : enumerate_graphs(4)) {
    const auto cc = connected_components(g);
    for (auto [u, v] : g.edges()) CHECK(cc.block_of[u] == cc.block_of[v]);
    std::size_t total = 0;
    for (const auto& b : cc.blocks) total += b.size();
    CHECK(total == static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST_CASE("furbished part") {
  const auto ep = furbished_part(plus(named::edge(), named::point()));
  CHECK(ep.graph == named::edge());
  CHECK(ep.vertices == std::vector<Vertex>{0, 1});
  CHECK(furbished_part(named::loop()).graph == named::loop());
  CHECK(furbished_part(named::discrete(2)).graph == named::empty());
  for (const auto& g : enumerate_graphs(4)) {
    const auto f = furbished_part(g);
    CHECK(is_furbished(f.graph));
    CHECK(furbished_part(f.graph).graph == f.graph);
    CHECK(f.vertices.size() + isolated_vertices(g).size() == static_cast<std::size_t>(g.vertex_count()));
  }
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(named::complete(4)) == 4);
  CHECK(chromatic_number(named::cycle(5)) == 3);
  CHECK_FALSE(chromatic_number(named::loop()));
  CHECK(chromatic_number(named::grotzsch()) == 4);
  for (const auto& g : enumerate_graphs_up_to(4)) CHECK(chromatic_number(g) == oracle::chromatic_number(g));
}

TEST_CASE("girths") {
  auto c6 = girths(named::cycle(6));
  CHECK(c6.girth == 6);
  CHECK_FALSE(c6.odd_girth);
  auto c5 = girths(named::cycle(5));
  CHECK(c5.girth == 5);
  CHECK(c5.odd_girth == 5);
  auto forest = girths(plus(named::point(), named::edge()));
  CHECK_FALSE(forest.girth);
  CHECK_FALSE(forest.odd_girth);
  CHECK(girths(named::loop()).girth == 1);
  CHECK(girths(named::loop()).odd_girth == 1);
  CHECK(girths(named::grotzsch()).girth == 4);
  CHECK(girths(named::grotzsch()).odd_girth == 5);
}

TEST_CASE("subobject counts") {
  CHECK(count_subobjects(named::discrete(3)) == 8);
  CHECK(count_subobjects(named::complete(3)) == 18);
  CHECK(count_subobjects(named::edge()) == 5);
  for (const auto& g : enumerate_graphs_up_to(4)) CHECK(count_subobjects(g) == oracle::subobjects(g));
  CHECK_THROWS_AS(count_subobjects(named::discrete(21)), BudgetExceeded);
}

TEST_CASE("graph text format") {
  CHECK(parse_graph("n 1\ne 0 0\n") == named::loop());
  CHECK(parse_graph("# comment\n\nn 3\ne 0 1\ne 1 2\n") == named::path(3));
  try {
    parse_graph("n 2\ne 0 1\ne 0 2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("n x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  for (const auto& g : small_corpus()) CHECK(parse_graph(print_graph(g)) == g);
  const std::string text = "n 3\ne 0 1\ne 1 2\n";
  CHECK(print_graph(parse_graph(text)) == text);
  CHECK(digest(named::path(3)) == "3:0-1,1-2");
  CHECK(digest(named::loop()) == "1:0-0");
}
