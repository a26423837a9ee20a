#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using Color = std::uint32_t;

/// Total map edge id -> color in [1, k].
struct EdgeColoring {
  std::vector<Color> color_of;
  Color k = 0;

  /// Takes colors as given; k becomes the largest id. Throws on color 0.
  static EdgeColoring from_colors(std::vector<Color> colors);

  std::size_t size() const { return color_of.size(); }
  Color operator[](EdgeId e) const { return color_of.at(e); }

  /// Number of distinct colors actually present.
  std::size_t colors_used() const;
};

/// A coloring of a subset of a graph's edges, palette [1, coloring.k].
/// coloring.color_of[i] is the color of edges[i].
struct ColoringPart {
  std::vector<EdgeId> edges;
  EdgeColoring coloring;
};

/// Concatenates disjoint palettes: part i's colors are shifted by the sum of
/// the previous parts' k. The parts must partition [0, edge_count).
EdgeColoring combine_colorings(std::size_t edge_count, std::span<const ColoringPart> parts);

/// Distinct colors on a BFS spanning forest, color 1 elsewhere; rainbow
/// connected whenever g is connected.
EdgeColoring spanning_tree_coloring(const Graph& g);

}  // namespace rainbow
