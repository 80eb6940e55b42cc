#include <doctest.h>

#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/limits.hpp"

using namespace graphmodel;

namespace {

bool iso(const Graph& a, const Graph& b) { return is_isomorphic(a, b).has_value(); }

std::vector<Graph> tiny() { return enumerate_graphs_up_to(2); }

}  // namespace

TEST_CASE("product examples") {
  for (const auto& g : enumerate_graphs_up_to(3)) CHECK(iso(*product(named::loop(), g).graph, g));
  const auto pk3 = product(named::point(), named::complete(3));
  CHECK(*pk3.graph == named::discrete(3));
  CHECK(iso(*product(named::edge(), named::edge()).graph, disjoint_union(named::edge(), named::edge())));
  const auto ee = product(named::edge(), named::edge());
  CHECK(ee.p1.map() == std::vector<Vertex>{0, 0, 1, 1});
  CHECK(ee.p2.map() == std::vector<Vertex>{0, 1, 0, 1});
}

TEST_CASE("product universal property") {
  const auto c = tiny();
  for (const auto& x : c)
    for (const auto& y : c)
      for (const auto& z : c) {
        const auto p = product(y, z);
        for (const auto& f : enumerate_homs(x, y))
          for (const auto& g : enumerate_homs(x, z)) {
            const Hom u = pairing(f, g);
            CHECK(compose(p.p1, u) == f);
            CHECK(compose(p.p2, u) == g);
          }
        // uniqueness: maps into the product are determined by their projections
        CHECK(enumerate_homs(x, *p.graph).size() == enumerate_homs(x, y).size() * enumerate_homs(x, z).size());
      }
}

TEST_CASE("coproduct examples") {
  for (const auto& g : enumerate_graphs_up_to(3)) CHECK(*coproduct(named::empty(), g).graph == g);
  CHECK(*coproduct(named::point(), named::point()).graph == named::discrete(2));
  for (const auto& a : tiny())
    for (const auto& b : tiny()) {
      const auto s = coproduct(a, b);
      CHECK(s.graph->vertex_count() == a.vertex_count() + b.vertex_count());
      CHECK(s.graph->edge_count() == a.edge_count() + b.edge_count());
    }
}

TEST_CASE("coproduct universal property") {
  const auto c = tiny();
  for (const auto& x : c)
    for (const auto& y : c)
      for (const auto& z : c) {
        const auto s = coproduct(x, y);
        for (const auto& f : enumerate_homs(x, z))
          for (const auto& g : enumerate_homs(y, z)) {
            const Hom u = copairing(f, g);
            CHECK(compose(u, s.i1) == f);
            CHECK(compose(u, s.i2) == g);
          }
        CHECK(enumerate_homs(*s.graph, z).size() == enumerate_homs(x, z).size() * enumerate_homs(y, z).size());
      }
}

TEST_CASE("equalizer examples") {
  const Hom f(named::edge(), named::complete(3), {0, 1});
  CHECK(*equalizer(f, f).graph == named::edge());
  const Graph pp = named::discrete(2);
  const auto swap_eq = equalizer(identity(pp), Hom(pp, pp, {1, 0}));
  CHECK(*swap_eq.graph == named::empty());
  const Hom g(named::edge(), named::complete(3), {0, 2});
  const auto shared = equalizer(f, g);
  CHECK(*shared.graph == named::point());
  CHECK(shared.inclusion.map() == std::vector<Vertex>{0});
  CHECK_THROWS_AS(equalizer(f, identity(named::edge())), InvalidInput);
}

TEST_CASE("coequalizer examples") {
  const Hom f(named::edge(), named::complete(3), {0, 1});
  CHECK(iso(*coequalizer(f, f).graph, named::complete(3)));
  const Hom a(named::point(), named::edge(), {0}), b(named::point(), named::edge(), {1});
  CHECK(*coequalizer(a, b).graph == named::loop());
  const Graph pp = named::discrete(2);
  const Hom l(named::point(), pp, {0}), r(named::point(), pp, {1});
  CHECK(*coequalizer(l, r).graph == named::point());
}

TEST_CASE("equalizer and coequalizer universal properties") {
  const auto c = tiny();
  for (const auto& x : c)
    for (const auto& y : c) {
      const auto homs = enumerate_homs(x, y);
      for (const auto& f : homs)
        for (const auto& g : homs) {
          const auto eq = equalizer(f, g);
          CHECK(compose(f, eq.inclusion) == compose(g, eq.inclusion));
          const auto co = coequalizer(f, g);
          CHECK(compose(co.projection, f) == compose(co.projection, g));
          for (const auto& w : c) {
            // every map out of y that coequalizes f, g factors through the projection
            for (const auto& k : enumerate_homs(y, w)) {
              if (!(compose(k, f) == compose(k, g))) continue;
              bool factors = false;
              for (const auto& u : enumerate_homs(*co.graph, w)) factors = factors || compose(u, co.projection) == k;
              CHECK(factors);
            }
            // every map into x that equalizes f, g factors through the inclusion
            for (const auto& k : enumerate_homs(w, x)) {
              if (!(compose(f, k) == compose(g, k))) continue;
              bool factors = false;
              for (const auto& u : enumerate_homs(w, *eq.graph)) factors = factors || compose(eq.inclusion, u) == k;
              CHECK(factors);
            }
          }
        }
    }
}

TEST_CASE("pullback and pushout") {
  const auto c = tiny();
  for (const auto& g : c) {
    const Hom f = to_terminal(share(g));
    const auto pb = pullback(f, identity(f.cod_ptr()));
    CHECK(iso(*pb.graph, g));
    const auto po = pushout(from_initial(share(g)), from_initial(share(named::edge())));
    CHECK(iso(*po.graph, disjoint_union(g, named::edge())));
  }
  const Hom a(named::point(), named::edge(), {0}), b(named::point(), named::edge(), {1});
  const auto glued = pushout(a, b);
  CHECK(glued.graph->vertex_count() == 3);
  CHECK(compose(glued.j1, a) == compose(glued.j2, b));
  const auto cospan = pullback(a, b);
  CHECK(*cospan.graph == named::empty());
  for (const auto& x : c)
    for (const auto& y : c)
      for (const auto& f : enumerate_homs(x, y))
        for (const auto& g : enumerate_homs(x, y)) {
          const auto p = pullback(f, g);
          CHECK(compose(f, p.q1) == compose(g, p.q2));
          const auto q = pushout(f, g);
          CHECK(compose(q.j1, f) == compose(q.j2, g));
        }
}

TEST_CASE("pairing and copairing laws") {
  for (const auto& g : tiny()) {
    for (const auto& h : tiny()) {
      for (const auto& f : enumerate_homs(g, h)) {
        const Hom pf = pairing(f, to_terminal(share(g)));
        const auto prod = product(share(h), share(named::loop()));
        CHECK(compose(prod.p1, pf) == f);
        const Hom fh = copairing(f, identity(h));
        const auto s = coproduct(g, h);
        CHECK(compose(fh, s.i1) == f);
        CHECK(compose(fh, s.i2) == identity(h));
        const Hom sum = coproduct_map(f, identity(h));
        CHECK(sum.dom().vertex_count() == g.vertex_count() + h.vertex_count());
      }
    }
    const Hom fold = copairing(identity(g), identity(g));
    CHECK(fold.map().size() == 2 * static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
      CHECK(fold(v) == v);
      CHECK(fold(v + g.vertex_count()) == v);
    }
  }
}
