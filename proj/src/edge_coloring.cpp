#include "rainbow/edge_coloring.hpp"

#include <algorithm>
#include <queue>

namespace rainbow {

EdgeColoring EdgeColoring::from_colors(std::vector<Color> colors) {
  EdgeColoring out;
  for (const Color c : colors) {
    if (c == 0) throw InputError("color ids start at 1");
    out.k = std::max(out.k, c);
  }
  out.color_of = std::move(colors);
  return out;
}

std::size_t EdgeColoring::colors_used() const {
  std::vector<Color> sorted = color_of;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

EdgeColoring combine_colorings(std::size_t edge_count, std::span<const ColoringPart> parts) {
  std::vector<Color> colors(edge_count, 0);
  Color offset = 0;
  for (const auto& part : parts) {
    if (part.edges.size() != part.coloring.size()) {
      throw InputError("combine_colorings: part coloring is not total on its edge set");
    }
    for (std::size_t i = 0; i < part.edges.size(); ++i) {
      const EdgeId e = part.edges[i];
      if (e >= edge_count) throw InputError("combine_colorings: edge id out of range");
      if (colors[e] != 0) throw InputError("combine_colorings: edge " + std::to_string(e) + " is in two parts");
      const Color c = part.coloring.color_of[i];
      if (c == 0 || c > part.coloring.k) throw InputError("combine_colorings: color outside the part palette");
      colors[e] = offset + c;
    }
    offset += part.coloring.k;
  }
  for (EdgeId e = 0; e < edge_count; ++e) {
    if (colors[e] == 0) throw InputError("combine_colorings: edge " + std::to_string(e) + " is not covered");
  }
  EdgeColoring out;
  out.color_of = std::move(colors);
  out.k = offset;
  return out;
}

EdgeColoring spanning_tree_coloring(const Graph& g) {
  std::vector<Color> colors(g.edge_count(), 1);
  std::vector<bool> seen(g.vertex_count(), false);
  Color next = 1;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      for (const auto& inc : g.incident(v)) {
        if (seen[inc.neighbor]) continue;
        seen[inc.neighbor] = true;
        colors[inc.edge] = next++;
        frontier.push(inc.neighbor);
      }
    }
  }
  return EdgeColoring::from_colors(std::move(colors));
}

}  // namespace rainbow
