#pragma once

#include "graphmodel/hom.hpp"

namespace graphmodel {

/// G×H with vertex (g, h) numbered g·|H| + h.
struct Product {
  GraphPtr graph;
  Hom p1;
  Hom p2;
};

/// G+H with G's vertices first.
struct Coproduct {
  GraphPtr graph;
  Hom i1;
  Hom i2;
};

struct Equalizer {
  GraphPtr graph;
  Hom inclusion;
};

struct Coequalizer {
  GraphPtr graph;
  Hom projection;
};

struct Pullback {
  GraphPtr graph;
  Hom q1;  ///< to dom of the first leg
  Hom q2;  ///< to dom of the second leg
};

struct Pushout {
  GraphPtr graph;
  Hom j1;  ///< from cod of the first leg
  Hom j2;  ///< from cod of the second leg
};

Product product(const GraphPtr& g, const GraphPtr& h);
Product product(const Graph& g, const Graph& h);
Coproduct coproduct(const GraphPtr& g, const GraphPtr& h);
Coproduct coproduct(const Graph& g, const Graph& h);

/// Subgraph induced on {x : f(x) = g(x)}, in increasing vertex order.
/// Throws InvalidInput unless f and g are parallel.
Equalizer equalizer(const Hom& f, const Hom& g);

/// Quotient of the codomain by the equivalence generated by f(x) ~ g(x).
/// Classes are numbered in order of their smallest member; an edge between
/// two identified vertices becomes a loop. Throws InvalidInput unless parallel.
Coequalizer coequalizer(const Hom& f, const Hom& g);

/// Pullback of the cospan f : A -> C <- B : g, as a subgraph of A×B.
Pullback pullback(const Hom& f, const Hom& g);
/// Pushout of the span f : C -> A, g : C -> B, as a quotient of A+B.
Pushout pushout(const Hom& f, const Hom& g);

/// ⟨f, g⟩ : X -> Y×Z for f : X -> Y, g : X -> Z.
Hom pairing(const Hom& f, const Hom& g);
/// [f, g] : X+Y -> Z for f : X -> Z, g : Y -> Z.
Hom copairing(const Hom& f, const Hom& g);
/// f+g : X+Y -> X'+Y'.
Hom coproduct_map(const Hom& f, const Hom& g);

}  // namespace graphmodel
