#pragma once

#include <optional>
#include <vector>

#include "graphmodel/config.hpp"
#include "graphmodel/graph.hpp"

namespace graphmodel {

/// A vertex bijection g -> h that is a graph isomorphism (bijection[v] is
/// the image of v), or nullopt.
std::optional<std::vector<Vertex>> is_isomorphic(const Graph& g, const Graph& h);

struct CanonicalForm {
  Graph graph;
  /// relabeling[v] is the vertex of `graph` that v of the input becomes
  std::vector<Vertex> relabeling;
};

/// Isomorphic inputs give identical `graph`s. Exhaustive over labellings
/// compatible with an equitable colour refinement, skipping twin vertices.
CanonicalForm canonical_form(const Graph& g);

/// Strict weak order on graphs used for canonical listings: vertex count,
/// then edge count, then edge list.
bool canonical_less(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class of graphs on exactly
/// n vertices (loops allowed), sorted by canonical_less.
/// Throws BudgetExceeded when n exceeds `max_vertices` or the hard cap.
std::vector<Graph> enumerate_graphs(int n, int max_vertices = kDefaultEnumerationBudget);

/// All canonical graphs with at most n vertices, including the empty graph.
std::vector<Graph> enumerate_graphs_up_to(int n, int max_vertices = kDefaultEnumerationBudget);

}  // namespace graphmodel
