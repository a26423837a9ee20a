#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"

namespace rainbow {

using Vertex = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Rejection raised by build_graph; carries the offending pair and its index.
class GraphError : public InputError {
public:
  enum class Kind { loop, duplicate, out_of_range };

  GraphError(Kind kind, std::size_t index, Edge pair);

  Kind kind() const noexcept { return kind_; }
  std::size_t index() const noexcept { return index_; }
  Edge pair() const noexcept { return pair_; }

private:
  Kind kind_;
  std::size_t index_;
  Edge pair_;
};

const char* to_string(GraphError::Kind kind);

/// Simple undirected graph. Vertices are 0..n-1; edge ids are positions in
/// the edge list. Immutable after construction.
class Graph {
public:
  Graph() = default;

  /// Validates the simple-graph invariants and throws GraphError on the
  /// first loop, duplicate pair or out-of-range endpoint.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> incident(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  /// Endpoint of `e` that is not `v`.
  Vertex other_end(EdgeId e, Vertex v) const;

  /// Common endpoint of two distinct edges, if any.
  std::optional<Vertex> shared_vertex(EdgeId a, EdgeId b) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

struct DegreeProfile {
  std::vector<std::size_t> degrees;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<Vertex> inner_vertices;
};

struct BlockDecomposition {
  std::vector<std::vector<EdgeId>> blocks;
  std::vector<Vertex> cut_vertices;
};

struct EdgeSubgraph {
  Graph graph;
  std::vector<Vertex> vertex_to_parent;
  std::vector<EdgeId> edge_to_parent;
};

struct ShrinkResult {
  Graph graph;
  // parent vertex -> quotient vertex; every member of the shrunk set maps to
  // the merged vertex, which is always the last vertex of the quotient.
  std::vector<Vertex> vertex_map;
  // parent edge -> quotient edge; nullopt for edges inside the shrunk set.
  // Parallel edges created by the identification share one quotient edge.
  std::vector<std::optional<EdgeId>> edge_map;
  Vertex merged = 0;
};

/// BFS distances from `source`; nullopt marks unreachable vertices.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Component index per vertex.
std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count = nullptr);

/// Longest shortest path; nullopt when disconnected, 0 for a single vertex.
std::optional<std::size_t> diameter(const Graph& g);

BlockDecomposition blocks(const Graph& g);

/// Subgraph spanned by the chosen edges. Vertices keep their parent order;
/// edges follow increasing parent id.
EdgeSubgraph induced_by_edges(const Graph& g, std::span<const EdgeId> edge_ids);

/// Deletes the edges inside `x` and identifies its members into one vertex.
ShrinkResult shrink(const Graph& g, std::span<const Vertex> x);

DegreeProfile degree_profile(const Graph& g);

bool is_tree(const Graph& g);

/// True when g is a path with at least `min_length` edges.
bool is_path(const Graph& g, std::size_t min_length = 1);

}  // namespace rainbow
