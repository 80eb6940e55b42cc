#include <doctest.h>

#include "graphmodel/arrow_index.hpp"
#include "graphmodel/canonical.hpp"
#include "graphmodel/error.hpp"
#include "graphmodel/generators.hpp"
#include "graphmodel/lifting.hpp"
#include "graphmodel/limits.hpp"
#include "graphmodel/predicates.hpp"
#include "graphmodel/text_format.hpp"

using namespace graphmodel;

namespace {

std::vector<Hom> arrows(int max_n) {
  std::vector<Hom> out;
  const auto c = enumerate_graphs_up_to(max_n);
  for (const auto& g : c)
    for (const auto& h : c)
      for (auto& f : enumerate_homs(g, h)) out.push_back(std::move(f));
  return out;
}

Hom fold_pp() { return Hom(named::discrete(2), named::point(), {0, 0}); }
Hom f_il() { return Hom(named::omega2(), named::loop(), {0, 0}); }

}  // namespace

TEST_CASE("square construction") {
  for (const auto& f : arrows(2)) {
    const Hom ia = identity(f.dom_ptr()), ib = identity(f.cod_ptr());
    CHECK_NOTHROW(Square::build(ia, ia, ia, ia));
    CHECK_NOTHROW(Square::build(f, f, ia, ib));
  }
  const Hom a(named::point(), named::edge(), {0}), b(named::point(), named::edge(), {1});
  const Hom ie = identity(named::edge()), ip = identity(named::point());
  CHECK_THROWS_AS(Square::build(a, ie, ip, ie), CompositionError);
  CHECK_THROWS_AS(Square::build(a, ie, a, Hom(named::edge(), named::edge(), {1, 0})), CommutativityError);
  CHECK_NOTHROW(Square::build(a, ie, b, Hom(named::edge(), named::edge(), {1, 0})));
}

TEST_CASE("fillers") {
  const auto all = arrows(2);
  for (const auto& left : all) {
    if (!is_isomorphism(left)) continue;
    for (const auto& top : all) {
      if (!same_graph(top.dom_ptr(), left.dom_ptr()) && !(top.dom() == left.dom())) continue;
      const Hom right = identity(top.cod_ptr());
      const Hom bottom = compose(top, inverse(left));
      const auto s = Square::build(left, right, top, bottom);
      auto h = find_filler(s);
      REQUIRE(h);
      CHECK(*h == compose(top, inverse(left)));
    }
  }
  for (const auto& right : all) {
    if (!is_isomorphism(right)) continue;
    for (const auto& bottom : all) {
      if (!(bottom.cod() == right.cod())) continue;
      const Hom left = identity(bottom.dom_ptr());
      const Hom top = compose(inverse(right), bottom);
      auto h = find_filler(Square::build(left, right, top, bottom));
      REQUIRE(h);
      CHECK(*h == compose(inverse(right), bottom));
    }
  }
  // the fold against OMEGA2 -> T, with the two points sent to different vertices
  const Hom top(named::discrete(2), named::omega2(), {0, 1});
  const Hom bottom(named::point(), named::loop(), {0});
  CHECK_FALSE(find_filler(Square::build(fold_pp(), f_il(), top, bottom)));
}

TEST_CASE("lifting examples") {
  const auto all = arrows(2);
  for (const auto& f : all) {
    for (const auto& g : all)
      if (is_isomorphism(g)) CHECK(lifts_left_of(f, g));
    if (is_injective(f)) CHECK(lifts_left_of(f, f_il()));
  }
  CHECK_FALSE(lifts_left_of(fold_pp(), f_il()));
  auto cex = lifting_counterexample(fold_pp(), f_il());
  REQUIRE(cex);
  CHECK_FALSE(find_filler(*cex));
}

TEST_CASE("lifting classes are closed under composition and contain isomorphisms") {
  const auto all = arrows(2);
  HomCache cache;
  const Hom gen = f_il();
  for (const auto& f : all) {
    if (!lifts_left_of(f, gen, &cache)) continue;
    for (const auto& g : all) {
      if (!(g.dom() == f.cod()) || !lifts_left_of(g, gen, &cache)) continue;
      CHECK(lifts_left_of(compose(g, f), gen, &cache));
    }
  }
}

TEST_CASE("index lifting agrees with direct lifting") {
  const auto index = MorphismIndex::corpus(2);
  HomCache cache;
  for (int f = 0; f < index->arrow_count(); ++f)
    for (int g = 0; g < index->arrow_count(); ++g)
      CHECK(index->lifts(f, g) == lifts_left_of(index->arrow(f), index->arrow(g), &cache));
}

TEST_CASE("morphism index") {
  const auto index = MorphismIndex::corpus(3);
  CHECK(index->object_count() == 29);
  for (int a = 0; a < index->object_count(); ++a) {
    const int id = index->identity(a);
    CHECK(index->arrow(id) == identity(index->object(a)));
    for (int b = 0; b < index->object_count(); ++b) {
      CHECK(static_cast<std::size_t>(index->count(a, b)) == enumerate_homs(index->object(a), index->object(b)).size());
      for (int k = index->first(a, b); k < index->first(a, b) + index->count(a, b); ++k) {
        CHECK(index->dom(k) == a);
        CHECK(index->cod(k) == b);
        CHECK(index->lookup(a, b, index->arrow(k).map()) == k);
      }
    }
  }
  for (int f = 0; f < index->arrow_count(); f += 7)
    for (int g = 0; g < index->arrow_count(); g += 11)
      if (index->cod(f) == index->dom(g))
        CHECK(index->arrow(index->compose(g, f)) == compose(index->arrow(g), index->arrow(f)));
  const Hom h(named::path(3), named::edge(), {1, 0, 1});
  auto located = index->locate(h);
  REQUIRE(located);
  CHECK(index->arrow(located->id).dom() == canonical_form(h.dom()).graph);
}

TEST_CASE("retracts") {
  const auto all = arrows(2);
  HomCache cache;
  for (const auto& f : all) CHECK(is_retract_of(f, f, &cache));
  const Hom id_p = identity(named::point());
  auto w = retract_witness(id_p, fold_pp(), &cache);
  REQUIRE(w);
  CHECK(compose(w->r_top, w->s_top) == id_p);
  CHECK(compose(w->r_bottom, w->s_bottom) == id_p);
  for (const auto& f : all) {
    if (is_injective(f)) continue;
    for (const auto& g : all)
      if (is_injective(g)) CHECK_FALSE(is_retract_of(f, g, &cache));
  }
  for (const auto& [s, r] : retraction_pairs(share(named::edge()), share(named::path(3)), &cache))
    CHECK(compose(r, s) == identity(named::edge()));
}

TEST_CASE("lifting generators") {
  const auto& gens = lifting_generators();
  const std::vector<std::string> names = {"f_ir",   "f_il",   "f_sr",   "f_sl",   "f_er",   "f_el1", "f_el2",
                                          "s_comp", "i_comp", "i_edge", "s_edge", "r_isol", "r_edge", "r_loop"};
  REQUIRE(gens.size() == names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    CHECK(gens[i].name == names[i]);
    CHECK((gens[i].status == GeneratorStatus::DerivedCandidate) == (i < 5));
  }
  CHECK(lifting_generator("f_ir").morphism == fold_pp());
  CHECK(lifting_generator("f_il").morphism == f_il());
  CHECK(lifting_generator("f_sr").side == LiftingSide::Right);
  CHECK(lifting_generator("f_sl").side == LiftingSide::Left);
  CHECK_THROWS_AS(lifting_generator("nope"), InvalidInput);

  // frozen outcome of the reconstruction search
  CHECK(describe(lifting_generator("s_comp").morphism) == "1:0-0 -> 2:0-0,1-1 : m 0");
  CHECK(describe(lifting_generator("i_comp").morphism) == "2:0-0,1-1 -> 1:0-0 : m 0 0");
  CHECK(describe(lifting_generator("i_edge").morphism) == "4:0-1,2-3 -> 3:0-2,1-2 : m 0 2 1 2");
  CHECK(describe(lifting_generator("s_edge").morphism) == "0: -> 2:0-1 : m");
  CHECK(describe(lifting_generator("r_loop").morphism) == "2:0-1,1-1 -> 1:0-0 : m 0 0");
  CHECK(describe(lifting_generator("r_edge").morphism) == "3:0-0,0-2,1-1,1-2,2-2 -> 1:0-0 : m 0 0 0");
  CHECK(describe(lifting_generator("r_isol").morphism) == "3:0-0,1-1,1-2,2-2 -> 2:0-0,0-1,1-1 : m 0 0 1");
  CHECK(describe(lifting_generator("f_el2").morphism) == "2:0-1,1-1 -> 2:0-0,0-1,1-1 : m 0 1");
  CHECK(describe(lifting_generator("f_el1").morphism) ==
        "3:0-0,0-2,1-1,1-2,2-2 -> 3:0-0,0-1,0-2,1-1,1-2,2-2 : m 0 1 2");
}

TEST_CASE("generator characterizations on small graphs") {
  const auto report = verify_characterizations(2);
  CHECK(report.lines.size() == 18);
  for (const auto& l : report.lines) {
    INFO(l.statement);
    CHECK(l.counterexamples == 0);
    CHECK(l.checked == report.morphisms);
  }
  for (const auto& f : arrows(2)) {
    CHECK(injective_on_furbished(f) == in_lifting_class(lifting_generator("i_edge"), f));
    CHECK(is_injective(f) == in_lifting_class(lifting_generator("f_ir"), f));
  }
}
