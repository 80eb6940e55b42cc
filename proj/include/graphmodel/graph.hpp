#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphmodel/config.hpp"

namespace graphmodel {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A finite undirected graph on vertices 0..n-1. Loops are allowed and
/// there is at most one edge between any two (possibly equal) vertices.
/// Immutable once built.
class Graph {
 public:
  /// The empty graph (no vertices).
  Graph() = default;

  /// Builds the graph with the given edges. Pairs are unordered and
  /// duplicates collapse; throws InvalidInput on an endpoint >= n or n < 0.
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1U;
  }
  bool has_loop(Vertex v) const noexcept { return adjacent(v, v); }
  bool has_any_loop() const noexcept { return loop_count_ > 0; }
  std::size_t loop_count() const noexcept { return loop_count_; }

  /// Edges as (u, v) with u <= v, sorted lexicographically.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  /// Neighbours of v in increasing order; v itself is listed when it has a loop.
  const std::vector<Vertex>& neighbors(Vertex v) const noexcept { return neighbors_[v]; }
  /// Number of incident edges, a loop counting once.
  int degree(Vertex v) const noexcept { return static_cast<int>(neighbors_[v].size()); }

  /// Adjacency row of v as 64-bit words; bit w of the row is set iff v ~ w.
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words_per_row() const noexcept { return words_; }

  /// Subgraph induced by `vertices` (kept in the given order, so vertex i of
  /// the result is vertices[i]).
  Graph induced(std::span<const Vertex> vertices) const;

  /// Byte string identifying the labelled graph exactly; equal keys iff equal graphs.
  std::string key() const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::size_t loop_count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> neighbors_;
};

struct GraphKeyHash {
  std::size_t operator()(const Graph& g) const;
};

/// Small graphs with fixed names.
namespace named {
Graph empty();   ///< no vertices; the initial object
Graph point();   ///< P: one vertex, no edge
Graph loop();    ///< T: one vertex with a loop; the terminal object
Graph edge();    ///< E: two vertices joined by an edge
Graph omega2();  ///< two looped vertices joined by an edge
Graph complete(int k);          ///< K_k, no loops
Graph complete_looped(int k);   ///< K_k with a loop on every vertex
Graph cycle(int k);             ///< C_k for k >= 3
Graph path(int k);              ///< path on k vertices
Graph discrete(int k);          ///< k isolated vertices
Graph grotzsch();               ///< 11-vertex triangle-free 4-chromatic graph
}  // namespace named

/// Disjoint union with the left operand's vertices first.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Blocks of vertices, each inducing a connected subgraph. Blocks are
/// sorted by their smallest vertex; vertices inside a block increase.
struct ComponentPartition {
  std::vector<std::vector<Vertex>> blocks;
  /// block index of every vertex
  std::vector<int> block_of;
};

ComponentPartition connected_components(const Graph& g);

struct FurbishedPart {
  /// vertices incident to at least one edge (a loop counts), increasing
  std::vector<Vertex> vertices;
  Graph graph;
};

FurbishedPart furbished_part(const Graph& g);
bool is_furbished(const Graph& g);
/// Vertices with no incident edge, increasing.
std::vector<Vertex> isolated_vertices(const Graph& g);

/// Least k with a homomorphism to K_k; nullopt when g has a loop.
std::optional<int> chromatic_number(const Graph& g);

struct Girths {
  std::optional<int> girth;      ///< shortest cycle; a loop is a 1-cycle
  std::optional<int> odd_girth;  ///< shortest odd cycle
};

Girths girths(const Graph& g);

/// Number of subgraphs: vertex subsets S times subsets of the edges induced by S.
/// Throws BudgetExceeded above `max_vertices` or when the count overflows 64 bits.
std::uint64_t count_subobjects(const Graph& g, int max_vertices = kSubobjectVertexBudget);

}  // namespace graphmodel
