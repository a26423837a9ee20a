#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// A 3-clique. `vertices` is sorted; `edge_ids` are the edges
/// vertices[0]vertices[1], vertices[1]vertices[2], vertices[0]vertices[2].
struct Triangle {
  std::array<Vertex, 3> vertices{};
  std::array<EdgeId, 3> edge_ids{};

  bool contains(Vertex v) const { return vertices[0] == v || vertices[1] == v || vertices[2] == v; }

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle& a, const Triangle& b) { return a.vertices <=> b.vertices; }
};

/// Rebuilds a triangle of `g` from its three edge ids.
Triangle triangle_from_edges(const Graph& g, const std::array<EdgeId, 3>& edge_ids);

/// Edge-disjoint triangles of a graph with the statistics of the subgraph
/// they span. Populated by classify_structure.
struct TrianglePacking {
  std::vector<Triangle> triangles;
  // Connected components of the spanned subgraph, as indices into triangles.
  std::vector<std::vector<std::size_t>> components;
  // Covered vertices of each component, sorted.
  std::vector<std::vector<Vertex>> component_vertices;
  std::vector<std::size_t> t_i;
  std::vector<bool> is_forest;
  std::vector<Vertex> covered_vertices;
  std::size_t t = 0;
  std::size_t c = 0;
  std::size_t n2 = 0;
  std::size_t n2_prime = 0;
  std::size_t op = 0;

  bool all_forest() const { return op == 0; }
};

enum class PackingMode { greedy, exact, forest_greedy, forest_exact };

std::string_view to_string(PackingMode mode);
PackingMode parse_packing_mode(std::string_view name);

inline constexpr std::size_t kDefaultExactTriangleCap = 24;

/// Every triangle exactly once, in lexicographic vertex order.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// Greedy modes scan triangles in canonical order and keep whatever does not
/// conflict. Exact modes search all subsets for a maximum packing and throw
/// ResourceLimitError when g has more than `exact_cap` triangles.
TrianglePacking pack_edge_disjoint(const Graph& g, PackingMode mode,
                                   std::size_t exact_cap = kDefaultExactTriangleCap);

/// Validates the triangles against g (membership, edge-disjointness) and
/// fills in every derived statistic. Forest flags come from the block
/// decomposition of the spanned subgraph.
TrianglePacking classify_structure(const Graph& g, std::vector<Triangle> triangles);

// --- Operations 1 and 2 ---------------------------------------------------

/// Edge `edge` = uv is removed. Its slot becomes u-u_new and a new edge
/// v-v_new is appended with id `v_edge`.
struct Op1Step {
  EdgeId edge = 0;
  Vertex u = 0;
  Vertex v = 0;
  Vertex u_new = 0;
  Vertex v_new = 0;
  EdgeId v_edge = 0;
};

/// `vertex` keeps every edge except `moved_edges`, which are re-attached to
/// the new vertex `split`.
struct Op2Step {
  Vertex vertex = 0;
  Vertex split = 0;
  std::vector<EdgeId> moved_edges;
};

using TransformStep = std::variant<Op1Step, Op2Step>;

struct TransformTrace {
  Graph source;
  std::vector<TransformStep> steps;
  Graph final_graph;
};

struct Op1Result {
  Graph graph;
  Op1Step step;
};

struct Op2Result {
  Graph graph;
  Op2Step step;
};

/// Requires both endpoints of `e` to have degree at least two.
Op1Result operation1(const Graph& g, EdgeId e);

/// Splits `v` between two nonempty groups of edge-disjoint triangles through
/// it. Triangle edges at v follow their triangle; all other edges at v stay.
Op2Result operation2(const Graph& g, Vertex v, std::span<const Triangle> stay, std::span<const Triangle> move);

/// Applies one recorded step to the graph it was recorded against.
Graph apply_step(const Graph& g, const TransformStep& step);

/// Re-applies every step of the trace to its source.
Graph replay(const TransformTrace& trace);

struct TransformResult {
  TransformTrace trace;
  // The packing's triangles re-classified inside trace.final_graph.
  TrianglePacking final_packing;
  std::size_t op1_steps = 0;
  std::size_t op2_steps = 0;
};

/// Splits every non-packing edge inside a component's covered vertices with
/// Operation 1, then applies Operation 2 until every component is a
/// triangle forest. Throws InvariantViolation if the number of Operation 2
/// steps differs from p.op.
TransformResult build_transformed(const Graph& g, const TrianglePacking& p);

}  // namespace rainbow
