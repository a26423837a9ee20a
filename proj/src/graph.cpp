#include "rainbow/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace rainbow {

namespace {

std::string describe(GraphError::Kind kind, std::size_t index, Edge pair) {
  std::ostringstream out;
  out << to_string(kind) << " at pair " << index << " (" << pair.u << ',' << pair.v << ')';
  return out.str();
}

}  // namespace

GraphError::GraphError(Kind kind, std::size_t index, Edge pair)
    : InputError(describe(kind, index, pair)), kind_(kind), index_(index), pair_(pair) {}

const char* to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::loop:
      return "loop";
    case GraphError::Kind::duplicate:
      return "duplicate edge";
    case GraphError::Kind::out_of_range:
      return "vertex out of range";
  }
  return "unknown";
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= vertex_count || v >= vertex_count) {
      throw GraphError(GraphError::Kind::out_of_range, e, edges_[e]);
    }
    if (u == v) throw GraphError(GraphError::Kind::loop, e, edges_[e]);
    // Scan the shorter list; inputs here are small and sparse.
    const auto& shorter = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    const Vertex target = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    for (const auto& inc : shorter) {
      if (inc.neighbor == target) throw GraphError(GraphError::Kind::duplicate, e, edges_[e]);
    }
    adjacency_[u].push_back({v, e});
    adjacency_[v].push_back({u, e});
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return std::nullopt;
  const auto& shorter = degree(a) <= degree(b) ? adjacency_[a] : adjacency_[b];
  const Vertex target = degree(a) <= degree(b) ? b : a;
  for (const auto& inc : shorter) {
    if (inc.neighbor == target) return inc.edge;
  }
  return std::nullopt;
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw InputError("vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

std::optional<Vertex> Graph::shared_vertex(EdgeId a, EdgeId b) const {
  if (a == b) return std::nullopt;
  const Edge& x = edge(a);
  const Edge& y = edge(b);
  if (x.u == y.u || x.u == y.v) return x.u;
  if (x.v == y.u || x.v == y.v) return x.v;
  return std::nullopt;
}

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (const auto& inc : g.incident(v)) {
      if (!dist[inc.neighbor]) {
        dist[inc.neighbor] = *dist[v] + 1;
        frontier.push(inc.neighbor);
      }
    }
  }
  return dist;
}

std::vector<std::size_t> connected_components(const Graph& g, std::size_t* count) {
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.vertex_count(), unset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (comp[inc.neighbor] == unset) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

bool is_connected(const Graph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

namespace {

// Hopcroft-Tarjan biconnected components over an explicit edge stack.
class BlockFinder {
public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(g.vertex_count(), 0), low_(g.vertex_count(), 0), is_cut_(g.vertex_count(), false) {}

  BlockDecomposition run() {
    for (Vertex s = 0; s < g_.vertex_count(); ++s) {
      if (disc_[s] == 0 && g_.degree(s) > 0) visit_root(s);
    }
    BlockDecomposition out;
    out.blocks = std::move(blocks_);
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      if (is_cut_[v]) out.cut_vertices.push_back(v);
    }
    return out;
  }

private:
  struct Frame {
    Vertex v;
    EdgeId parent_edge;
    std::size_t next = 0;
  };

  void visit_root(Vertex root) {
    constexpr EdgeId none = static_cast<EdgeId>(-1);
    std::vector<Frame> stack{{root, none}};
    disc_[root] = low_[root] = ++clock_;
    std::size_t root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g_.incident(f.v);
      if (f.next < inc.size()) {
        const auto [w, e] = inc[f.next++];
        if (e == f.parent_edge) continue;
        if (disc_[w] == 0) {
          edge_stack_.push_back(e);
          disc_[w] = low_[w] = ++clock_;
          if (f.v == root) ++root_children;
          stack.push_back({w, e});
        } else if (disc_[w] < disc_[f.v]) {
          edge_stack_.push_back(e);
          low_[f.v] = std::min(low_[f.v], disc_[w]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low_[parent] = std::min(low_[parent], low_[done.v]);
      if (low_[done.v] >= disc_[parent]) {
        if (parent != root) is_cut_[parent] = true;
        std::vector<EdgeId> block;
        while (true) {
          const EdgeId e = edge_stack_.back();
          edge_stack_.pop_back();
          block.push_back(e);
          if (e == done.parent_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks_.push_back(std::move(block));
      }
    }
    if (root_children > 1) is_cut_[root] = true;
  }

  const Graph& g_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::vector<bool> is_cut_;
  std::vector<EdgeId> edge_stack_;
  std::vector<std::vector<EdgeId>> blocks_;
  std::size_t clock_ = 0;
};

}  // namespace

BlockDecomposition blocks(const Graph& g) { return BlockFinder(g).run(); }

EdgeSubgraph induced_by_edges(const Graph& g, std::span<const EdgeId> edge_ids) {
  std::vector<EdgeId> ids(edge_ids.begin(), edge_ids.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<bool> used(g.vertex_count(), false);
  for (const EdgeId e : ids) {
    if (e >= g.edge_count()) throw InputError("invalid edge id " + std::to_string(e));
    used[g.edge(e).u] = used[g.edge(e).v] = true;
  }
  EdgeSubgraph out;
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!used[v]) continue;
    local[v] = out.vertex_to_parent.size();
    out.vertex_to_parent.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(ids.size());
  for (const EdgeId e : ids) edges.push_back({local[g.edge(e).u], local[g.edge(e).v]});
  out.graph = Graph(out.vertex_to_parent.size(), std::move(edges));
  out.edge_to_parent = std::move(ids);
  return out;
}

ShrinkResult shrink(const Graph& g, std::span<const Vertex> x) {
  std::vector<bool> in_x(g.vertex_count(), false);
  std::size_t members = 0;
  for (const Vertex v : x) {
    if (v >= g.vertex_count()) throw InputError("shrink: vertex out of range");
    if (!in_x[v]) ++members;
    in_x[v] = true;
  }
  if (members == 0 || members == g.vertex_count()) {
    throw InputError("shrink: the set must be a proper nonempty subset of the vertices");
  }
  ShrinkResult out;
  out.vertex_map.resize(g.vertex_count());
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_x[v]) out.vertex_map[v] = next++;
  }
  out.merged = next;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (in_x[v]) out.vertex_map[v] = out.merged;
  }

  std::map<std::pair<Vertex, Vertex>, EdgeId> seen;
  std::vector<Edge> edges;
  out.edge_map.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (in_x[u] && in_x[v]) continue;
    const Vertex a = out.vertex_map[u];
    const Vertex b = out.vertex_map[v];
    const auto key = std::minmax(a, b);
    auto [it, fresh] = seen.try_emplace({key.first, key.second}, edges.size());
    if (fresh) edges.push_back({a, b});
    out.edge_map[e] = it->second;
  }
  out.graph = Graph(out.merged + 1, std::move(edges));
  return out;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    p.degrees[v] = g.degree(v);
    if (p.degrees[v] == 1) ++p.n1;
    if (p.degrees[v] >= 2) p.inner_vertices.push_back(v);
  }
  p.n2 = p.inner_vertices.size();
  return p;
}

bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

bool is_path(const Graph& g, std::size_t min_length) {
  if (!is_tree(g) || g.edge_count() < min_length) return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

}  // namespace rainbow
