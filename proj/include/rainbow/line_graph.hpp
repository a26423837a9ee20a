#pragma once

#include <cstddef>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// L(G) together with its bookkeeping against G.
///
/// Vertex i of `l_graph` is edge i of the source graph. L-edges are emitted
/// star by star: for each source vertex in increasing order, every pair of
/// its incident edges (in incidence order) becomes one L-edge, so each L-edge
/// belongs to exactly one star clique.
struct LineGraphResult {
  Graph l_graph;
  std::vector<Vertex> edge_to_vertex;
  std::vector<EdgeId> vertex_to_edge;
  // star_of[v] = L-vertices of the edges incident to source vertex v.
  std::vector<std::vector<Vertex>> star_of;
  // Source vertex whose star clique contains each L-edge.
  std::vector<Vertex> l_edge_star;
};

struct CliqueGraphResult {
  std::vector<std::vector<Vertex>> maximal_cliques;
  Graph k_graph;
};

inline constexpr std::size_t kDefaultCliqueCap = 10'000;

LineGraphResult line_graph(const Graph& g);

/// k successive line graphs; element i is built on element i-1's l_graph.
/// Throws InputError when a graph that must be line-graphed has no edges.
std::vector<LineGraphResult> iterated_line_graph(const Graph& g, std::size_t k);

/// Maximal cliques by Bron-Kerbosch with pivoting, plus their intersection
/// graph. Throws ResourceLimitError once more than `cap` cliques are found.
CliqueGraphResult clique_graph(const Graph& g, std::size_t cap = kDefaultCliqueCap);

}  // namespace rainbow
