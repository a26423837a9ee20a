#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/edge_coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/line_graph.hpp"
#include "rainbow/triangles.hpp"

namespace rainbow {

struct ColoringCertificate {
  std::string bound_name;
  std::size_t bound_value = 0;
  std::size_t colors_used = 0;
  bool verified = false;
  std::optional<std::pair<Vertex, Vertex>> witness_failure;
};

struct NamedBound {
  std::string name;
  std::size_t value = 0;
};

/// A verified coloring of L(g) (or L^2(g)) plus how it was obtained.
struct Construction {
  Graph target;
  EdgeColoring coloring;
  ColoringCertificate certificate;
  // Every bound the construction promises; certificate.verified requires
  // colors_used to respect all of them.
  std::vector<NamedBound> bounds;
  TrianglePacking packing;
  std::size_t op1_steps = 0;
  std::size_t op2_steps = 0;
};

/// Two-coloring of L(g) for a graph whose only cycle is one triangle and
/// whose other edges are pendant at the triangle.
EdgeColoring color_single_triangle(const Graph& g, const LineGraphResult& lg);

/// Colors the star cliques of the component's vertices with at most
/// (#triangles + 1) colors by peeling leaf triangles. The component must be
/// a triangle tree with no chords; edges leaving it are treated as pendants.
/// Returned edges are L-edge ids of lg.l_graph in increasing order.
ColoringPart color_triangle_tree(const Graph& g, const LineGraphResult& lg, std::span<const Triangle> component);

/// rc(L(g)) <= n2 - t for a packing whose structure is a triangle forest.
Construction color_thm31(const Graph& g, const TrianglePacking& p);

/// rc(L(g)) <= t + n2' + c = n2 + op - t for any edge-disjoint packing.
Construction color_thm32(const Graph& g, const TrianglePacking& p);

/// rc(L^2(g)) <= n + 1 for connected cubic g, via the star triangles of L(g).
Construction color_iterated_cubic(const Graph& g);

/// rc(L^2(g)) <= m - m1: one fresh color per star clique of an inner
/// vertex of L(g).
Construction color_iterated(const Graph& g);

/// Number of degree-1 vertices whose neighbor has degree 2.
std::size_t pendent_two_paths(const Graph& g);

/// Carries a coloring of L(trace.final_graph) back to L(trace.source).
/// Operation 1 steps merge the two split L-vertices; L-edges that exist only
/// before an Operation 2 step receive color 1.
EdgeColoring project_coloring(const TransformTrace& trace, const EdgeColoring& coloring);

}  // namespace rainbow
