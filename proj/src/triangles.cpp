#include "rainbow/triangles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace rainbow {

namespace {

// Union-find over a small vertex universe; used to track structure
// components while searching.
class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
  std::vector<std::size_t> parent_;
};

std::array<EdgeId, 3> sorted_ids(const Triangle& t) {
  auto ids = t.edge_ids;
  std::sort(ids.begin(), ids.end());
  return ids;
}

Graph split_vertex(const Graph& g, Vertex v, std::span<const EdgeId> moved) {
  std::vector<Edge> edges = g.edges();
  const Vertex split = g.vertex_count();
  for (const EdgeId e : moved) {
    Edge& ed = edges.at(e);
    if (ed.u == v) {
      ed.u = split;
    } else if (ed.v == v) {
      ed.v = split;
    } else {
      throw InputError("operation2: edge " + std::to_string(e) + " is not incident to the split vertex");
    }
  }
  return Graph(g.vertex_count() + 1, std::move(edges));
}

class ExactPacker {
public:
  ExactPacker(const Graph& g, std::vector<Triangle> tris, bool forest)
      : g_(g), tris_(std::move(tris)), forest_(forest), edge_used_(g.edge_count(), false) {}

  std::vector<Triangle> run() {
    search(0);
    std::vector<Triangle> out;
    for (const std::size_t i : best_) out.push_back(tris_[i]);
    return out;
  }

private:
  bool edges_free(const Triangle& t) const {
    return !edge_used_[t.edge_ids[0]] && !edge_used_[t.edge_ids[1]] && !edge_used_[t.edge_ids[2]];
  }

  void set_edges(const Triangle& t, bool used) {
    for (const EdgeId e : t.edge_ids) edge_used_[e] = used;
  }

  // Adding a triangle to a forest keeps it a forest iff its already-covered
  // vertices lie in pairwise distinct components.
  bool keeps_forest(const Triangle& t) const {
    DisjointSets ds(g_.vertex_count());
    std::vector<bool> covered(g_.vertex_count(), false);
    for (const std::size_t i : chosen_) {
      const auto& [a, b, c] = tris_[i].vertices;
      ds.unite(a, b);
      ds.unite(b, c);
      covered[a] = covered[b] = covered[c] = true;
    }
    std::vector<std::size_t> roots;
    for (const Vertex v : t.vertices) {
      if (covered[v]) roots.push_back(ds.find(v));
    }
    std::sort(roots.begin(), roots.end());
    return std::adjacent_find(roots.begin(), roots.end()) == roots.end();
  }

  void search(std::size_t i) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (i == tris_.size() || chosen_.size() + (tris_.size() - i) <= best_.size()) return;
    const Triangle& t = tris_[i];
    if (edges_free(t) && (!forest_ || keeps_forest(t))) {
      chosen_.push_back(i);
      set_edges(t, true);
      search(i + 1);
      set_edges(t, false);
      chosen_.pop_back();
    }
    search(i + 1);
  }

  const Graph& g_;
  std::vector<Triangle> tris_;
  bool forest_;
  std::vector<bool> edge_used_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

Triangle triangle_from_edges(const Graph& g, const std::array<EdgeId, 3>& edge_ids) {
  std::vector<Vertex> vs;
  for (const EdgeId e : edge_ids) {
    vs.push_back(g.edge(e).u);
    vs.push_back(g.edge(e).v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  if (vs.size() != 3) throw InputError("edges do not form a triangle");
  Triangle t;
  std::copy(vs.begin(), vs.end(), t.vertices.begin());
  const auto e01 = g.find_edge(vs[0], vs[1]);
  const auto e12 = g.find_edge(vs[1], vs[2]);
  const auto e02 = g.find_edge(vs[0], vs[2]);
  if (!e01 || !e12 || !e02) throw InputError("edges do not form a triangle");
  t.edge_ids = {*e01, *e12, *e02};
  auto want = edge_ids;
  std::sort(want.begin(), want.end());
  if (sorted_ids(t) != want) throw InputError("edges do not form a triangle");
  return t;
}

std::string_view to_string(PackingMode mode) {
  switch (mode) {
    case PackingMode::greedy:
      return "greedy";
    case PackingMode::exact:
      return "exact";
    case PackingMode::forest_greedy:
      return "forest_greedy";
    case PackingMode::forest_exact:
      return "forest_exact";
  }
  return "unknown";
}

PackingMode parse_packing_mode(std::string_view name) {
  for (const auto mode : {PackingMode::greedy, PackingMode::exact, PackingMode::forest_greedy, PackingMode::forest_exact}) {
    if (to_string(mode) == name) return mode;
  }
  throw InputError("unknown packing mode '" + std::string(name) + "'");
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < g.vertex_count(); ++a) {
    std::vector<Vertex> higher;
    for (const auto& inc : g.incident(a)) {
      if (inc.neighbor > a) higher.push_back(inc.neighbor);
    }
    std::sort(higher.begin(), higher.end());
    for (std::size_t i = 0; i < higher.size(); ++i) {
      for (std::size_t j = i + 1; j < higher.size(); ++j) {
        const Vertex b = higher[i];
        const Vertex c = higher[j];
        if (const auto bc = g.find_edge(b, c)) {
          out.push_back({{a, b, c}, {*g.find_edge(a, b), *bc, *g.find_edge(a, c)}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TrianglePacking pack_edge_disjoint(const Graph& g, PackingMode mode, std::size_t exact_cap) {
  auto all = enumerate_triangles(g);
  const bool forest = mode == PackingMode::forest_greedy || mode == PackingMode::forest_exact;
  std::vector<Triangle> chosen;
  if (mode == PackingMode::exact || mode == PackingMode::forest_exact) {
    if (all.size() > exact_cap) {
      throw ResourceLimitError("exact packing: " + std::to_string(all.size()) + " triangles exceed the cap of " +
                               std::to_string(exact_cap));
    }
    chosen = ExactPacker(g, std::move(all), forest).run();
  } else {
    std::vector<bool> used(g.edge_count(), false);
    DisjointSets ds(g.vertex_count());
    std::vector<bool> covered(g.vertex_count(), false);
    for (const auto& t : all) {
      if (used[t.edge_ids[0]] || used[t.edge_ids[1]] || used[t.edge_ids[2]]) continue;
      if (forest) {
        std::vector<std::size_t> roots;
        for (const Vertex v : t.vertices) {
          if (covered[v]) roots.push_back(ds.find(v));
        }
        std::sort(roots.begin(), roots.end());
        if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) continue;
      }
      for (const EdgeId e : t.edge_ids) used[e] = true;
      const auto& [a, b, c] = t.vertices;
      ds.unite(a, b);
      ds.unite(b, c);
      covered[a] = covered[b] = covered[c] = true;
      chosen.push_back(t);
    }
  }
  return classify_structure(g, std::move(chosen));
}

TrianglePacking classify_structure(const Graph& g, std::vector<Triangle> triangles) {
  std::vector<bool> edge_used(g.edge_count(), false);
  std::vector<EdgeId> structure_edges;
  for (const auto& t : triangles) {
    for (const EdgeId e : t.edge_ids) {
      if (e >= g.edge_count()) throw InputError("packing references an unknown edge");
    }
    if (triangle_from_edges(g, t.edge_ids) != t) throw InputError("packing triangle does not match the graph");
    for (const EdgeId e : t.edge_ids) {
      if (edge_used[e]) throw InputError("packing triangles are not edge-disjoint (edge " + std::to_string(e) + ")");
      edge_used[e] = true;
      structure_edges.push_back(e);
    }
  }

  TrianglePacking p;
  p.triangles = std::move(triangles);
  p.t = p.triangles.size();

  const auto sub = induced_by_edges(g, structure_edges);
  std::size_t sub_components = 0;
  const auto comp_of_local = connected_components(sub.graph, &sub_components);
  std::vector<std::size_t> comp_of(g.vertex_count(), static_cast<std::size_t>(-1));
  for (Vertex lv = 0; lv < sub.graph.vertex_count(); ++lv) comp_of[sub.vertex_to_parent[lv]] = comp_of_local[lv];

  // Number components by their lowest triangle index.
  std::vector<std::size_t> renumber(sub_components, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < p.triangles.size(); ++i) {
    std::size_t& slot = renumber[comp_of[p.triangles[i].vertices[0]]];
    if (slot == static_cast<std::size_t>(-1)) {
      slot = p.components.size();
      p.components.emplace_back();
    }
    p.components[slot].push_back(i);
  }
  p.c = p.components.size();
  p.t_i.resize(p.c);
  p.component_vertices.resize(p.c);
  p.is_forest.assign(p.c, true);
  for (std::size_t k = 0; k < p.c; ++k) p.t_i[k] = p.components[k].size();
  for (Vertex lv = 0; lv < sub.graph.vertex_count(); ++lv) {
    const Vertex v = sub.vertex_to_parent[lv];
    p.component_vertices[renumber[comp_of[v]]].push_back(v);
    p.covered_vertices.push_back(v);
  }

  for (const auto& block : blocks(sub.graph).blocks) {
    if (block.size() != 3) {
      const Vertex v = sub.vertex_to_parent[sub.graph.edge(block.front()).u];
      p.is_forest[renumber[comp_of[v]]] = false;
    }
  }

  const auto profile = degree_profile(g);
  p.n2 = profile.n2;
  for (const Vertex v : profile.inner_vertices) {
    if (comp_of[v] == static_cast<std::size_t>(-1)) ++p.n2_prime;
  }
  const std::size_t capacity = 2 * p.t + p.c;
  if (capacity < p.covered_vertices.size()) {
    throw InvariantViolation("triangle structure covers more than 2t + c vertices");
  }
  p.op = capacity - p.covered_vertices.size();
  return p;
}

Op1Result operation1(const Graph& g, EdgeId e) {
  const auto [u, v] = g.edge(e);
  if (g.degree(u) < 2 || g.degree(v) < 2) {
    throw InputError("operation1: both endpoints of edge " + std::to_string(e) + " need degree at least two");
  }
  Op1Step step{e, u, v, g.vertex_count(), g.vertex_count() + 1, g.edge_count()};
  std::vector<Edge> edges = g.edges();
  edges[e] = {u, step.u_new};
  edges.push_back({v, step.v_new});
  return {Graph(g.vertex_count() + 2, std::move(edges)), step};
}

Op2Result operation2(const Graph& g, Vertex v, std::span<const Triangle> stay, std::span<const Triangle> move) {
  if (v >= g.vertex_count()) throw InputError("operation2: vertex out of range");
  if (stay.empty() || move.empty()) throw InputError("operation2: both sides of the split need a triangle");
  std::vector<bool> seen(g.edge_count(), false);
  for (const auto* side : {&stay, &move}) {
    for (const auto& t : *side) {
      if (!t.contains(v)) throw InputError("operation2: triangle does not contain the split vertex");
      if (triangle_from_edges(g, t.edge_ids) != t) throw InputError("operation2: triangle not in graph");
      for (const EdgeId e : t.edge_ids) {
        if (seen[e]) throw InputError("operation2: triangles are not edge-disjoint");
        seen[e] = true;
      }
    }
  }
  Op2Step step;
  step.vertex = v;
  step.split = g.vertex_count();
  for (const auto& t : move) {
    for (const EdgeId e : t.edge_ids) {
      if (g.edge(e).u == v || g.edge(e).v == v) step.moved_edges.push_back(e);
    }
  }
  std::sort(step.moved_edges.begin(), step.moved_edges.end());
  Graph out = split_vertex(g, v, step.moved_edges);
  return {std::move(out), std::move(step)};
}

Graph apply_step(const Graph& g, const TransformStep& step) {
  if (const auto* s1 = std::get_if<Op1Step>(&step)) {
    if (s1->edge >= g.edge_count() || g.edge(s1->edge) != Edge{s1->u, s1->v} || s1->u_new != g.vertex_count() ||
        s1->v_edge != g.edge_count()) {
      throw InputError("trace does not match graph (operation 1 on edge " + std::to_string(s1->edge) + ")");
    }
    return operation1(g, s1->edge).graph;
  }
  const auto& s2 = std::get<Op2Step>(step);
  if (s2.split != g.vertex_count()) throw InputError("trace does not match graph (operation 2)");
  return split_vertex(g, s2.vertex, s2.moved_edges);
}

Graph replay(const TransformTrace& trace) {
  Graph g = trace.source;
  for (const auto& step : trace.steps) g = apply_step(g, step);
  return g;
}

namespace {

struct SplitChoice {
  Vertex vertex;
  std::size_t triangle;
};

// Candidate (vertex, triangle) splits in the order they are tried: vertices
// ascending, then triangles of the same non-forest block ascending.
std::vector<SplitChoice> split_candidates(const Graph& h, const std::vector<Triangle>& tris) {
  std::vector<EdgeId> structure_edges;
  std::vector<std::size_t> tri_of_edge(h.edge_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < tris.size(); ++i) {
    for (const EdgeId e : tris[i].edge_ids) {
      structure_edges.push_back(e);
      tri_of_edge[e] = i;
    }
  }
  const auto sub = induced_by_edges(h, structure_edges);
  std::vector<SplitChoice> out;
  for (const auto& block : blocks(sub.graph).blocks) {
    if (block.size() == 3) continue;
    std::vector<std::size_t> block_tris;
    for (const EdgeId local : block) block_tris.push_back(tri_of_edge[sub.edge_to_parent[local]]);
    std::sort(block_tris.begin(), block_tris.end());
    block_tris.erase(std::unique(block_tris.begin(), block_tris.end()), block_tris.end());
    std::vector<Vertex> verts;
    for (const std::size_t i : block_tris) verts.insert(verts.end(), tris[i].vertices.begin(), tris[i].vertices.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (const Vertex v : verts) {
      std::vector<std::size_t> through;
      for (const std::size_t i : block_tris) {
        if (tris[i].contains(v)) through.push_back(i);
      }
      if (through.size() < 2) continue;
      for (const std::size_t i : through) out.push_back({v, i});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const SplitChoice& a, const SplitChoice& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.triangle < b.triangle;
  });
  return out;
}

}  // namespace

TransformResult build_transformed(const Graph& g, const TrianglePacking& p) {
  if (!is_connected(g)) throw InputError("build_transformed: graph must be connected");
  const TrianglePacking base = classify_structure(g, p.triangles);

  TransformResult out;
  out.trace.source = g;
  Graph h = g;

  std::vector<bool> packing_edge(g.edge_count(), false);
  for (const auto& t : base.triangles) {
    for (const EdgeId e : t.edge_ids) packing_edge[e] = true;
  }
  std::vector<std::size_t> comp_of(g.vertex_count(), static_cast<std::size_t>(-1));
  for (std::size_t k = 0; k < base.c; ++k) {
    for (const Vertex v : base.component_vertices[k]) comp_of[v] = k;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (packing_edge[e] || comp_of[u] == static_cast<std::size_t>(-1) || comp_of[u] != comp_of[v]) continue;
    auto r = operation1(h, e);
    h = std::move(r.graph);
    out.trace.steps.emplace_back(r.step);
    ++out.op1_steps;
  }

  // Triangle edge ids survive both operations; vertices are re-derived.
  std::vector<std::array<EdgeId, 3>> tri_edges;
  for (const auto& t : base.triangles) tri_edges.push_back(t.edge_ids);
  auto current_triangles = [&] {
    std::vector<Triangle> tris;
    for (const auto& ids : tri_edges) tris.push_back(triangle_from_edges(h, ids));
    return tris;
  };

  TrianglePacking current = classify_structure(h, current_triangles());
  while (current.op > 0) {
    bool applied = false;
    for (const auto& choice : split_candidates(h, current.triangles)) {
      std::vector<Triangle> stay;
      const std::vector<Triangle> move{current.triangles[choice.triangle]};
      for (std::size_t i = 0; i < current.triangles.size(); ++i) {
        if (i != choice.triangle && current.triangles[i].contains(choice.vertex)) stay.push_back(current.triangles[i]);
      }
      auto r = operation2(h, choice.vertex, stay, move);
      std::vector<Triangle> next_tris;
      for (const auto& ids : tri_edges) next_tris.push_back(triangle_from_edges(r.graph, ids));
      auto next = classify_structure(r.graph, std::move(next_tris));
      if (next.c != current.c) continue;
      h = std::move(r.graph);
      out.trace.steps.emplace_back(std::move(r.step));
      ++out.op2_steps;
      current = std::move(next);
      applied = true;
      break;
    }
    if (!applied) {
      throw InvariantViolation("build_transformed: no connectivity-preserving operation 2 split found");
    }
  }
  if (out.op2_steps != base.op) {
    throw InvariantViolation("build_transformed: applied " + std::to_string(out.op2_steps) +
                             " operation 2 steps but op = " + std::to_string(base.op));
  }
  out.trace.final_graph = h;
  out.final_packing = std::move(current);
  return out;
}

}  // namespace rainbow
