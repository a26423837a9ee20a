#include "rainbow/coloring.hpp"

#include <algorithm>
#include <map>

#include "rainbow/verifier.hpp"

namespace rainbow {

namespace {

std::vector<std::vector<EdgeId>> star_edges(const LineGraphResult& lg) {
  std::vector<std::vector<EdgeId>> out(lg.star_of.size());
  for (EdgeId le = 0; le < lg.l_edge_star.size(); ++le) out[lg.l_edge_star[le]].push_back(le);
  return out;
}

// Colors the L-edges of one star clique. An L-edge touching `first` gets
// `first_color`; otherwise one touching `second` gets `second_color`; all
// others get `rest_color`.
struct StarRule {
  EdgeId first;
  Color first_color;
  EdgeId second;
  Color second_color;
  Color rest_color;
};

void color_star(const LineGraphResult& lg, const std::vector<EdgeId>& l_edges, const StarRule& rule,
                std::map<EdgeId, Color>& out) {
  const Vertex first = lg.edge_to_vertex[rule.first];
  const Vertex second = lg.edge_to_vertex[rule.second];
  for (const EdgeId le : l_edges) {
    const auto [a, b] = lg.l_graph.edge(le);
    Color c = rule.rest_color;
    if (a == first || b == first) {
      c = rule.first_color;
    } else if (a == second || b == second) {
      c = rule.second_color;
    }
    out[le] = c;
  }
}

EdgeId edge_between(const Graph& g, Vertex a, Vertex b) {
  const auto e = g.find_edge(a, b);
  if (!e) throw InvariantViolation("triangle edge missing");
  return *e;
}

void require_nontrivial_line_graph(const Graph& g) {
  if (!is_connected(g)) throw InputError("graph must be connected");
  if (g.edge_count() < 2) throw InputError("line graph is trivial (fewer than two vertices)");
}

// Colors L(final) from the forest packing and outside stars, then projects
// the result back to L(source).
EdgeColoring color_transformed(const TransformResult& tr) {
  const Graph& h = tr.trace.final_graph;
  const auto lg = line_graph(h);
  const auto& fp = tr.final_packing;
  if (!fp.all_forest()) throw InvariantViolation("transformed packing is not a triangle forest");

  std::vector<ColoringPart> parts;
  for (const auto& comp : fp.components) {
    std::vector<Triangle> tris;
    for (const std::size_t i : comp) tris.push_back(fp.triangles[i]);
    parts.push_back(color_triangle_tree(h, lg, tris));
  }
  std::vector<bool> covered(h.vertex_count(), false);
  for (const Vertex v : fp.covered_vertices) covered[v] = true;
  const auto stars = star_edges(lg);
  for (Vertex x = 0; x < h.vertex_count(); ++x) {
    if (covered[x] || h.degree(x) < 2) continue;
    ColoringPart part;
    part.edges = stars[x];
    part.coloring = EdgeColoring::from_colors(std::vector<Color>(part.edges.size(), 1));
    parts.push_back(std::move(part));
  }
  const auto combined = combine_colorings(lg.l_graph.edge_count(), parts);
  return project_coloring(tr.trace, combined);
}

Construction certify(Construction c) {
  auto check = is_rainbow_connected(c.target, c.coloring);
  c.certificate.colors_used = c.coloring.colors_used();
  c.certificate.witness_failure = check.failing_pair;
  c.certificate.verified = check.connected;
  for (const auto& b : c.bounds) {
    if (c.certificate.colors_used > b.value) c.certificate.verified = false;
  }
  return c;
}

Construction packing_construction(const Graph& g, const TrianglePacking& p, bool forest_only) {
  require_nontrivial_line_graph(g);
  auto packing = classify_structure(g, p.triangles);
  if (forest_only && !packing.all_forest()) {
    throw InputError("packing does not span a triangle forest (op = " + std::to_string(packing.op) + ")");
  }
  const auto tr = build_transformed(g, packing);

  Construction c;
  c.target = line_graph(g).l_graph;
  c.coloring = color_transformed(tr);
  c.op1_steps = tr.op1_steps;
  c.op2_steps = tr.op2_steps;
  if (forest_only) {
    c.bounds.push_back({"n2-t", packing.n2 - packing.t});
  } else {
    c.bounds.push_back({"t+n2'+c", packing.t + packing.n2_prime + packing.c});
    c.bounds.push_back({"n2+op-t", packing.n2 + packing.op - packing.t});
  }
  c.certificate.bound_name = c.bounds.front().name;
  c.certificate.bound_value = c.bounds.front().value;
  c.packing = std::move(packing);
  return certify(std::move(c));
}

}  // namespace

ColoringPart color_triangle_tree(const Graph& g, const LineGraphResult& lg, std::span<const Triangle> component) {
  if (component.empty()) throw InputError("color_triangle_tree: empty component");
  const auto structure = classify_structure(g, {component.begin(), component.end()});
  if (structure.c != 1 || !structure.is_forest.front()) {
    throw InputError("color_triangle_tree: component is not a triangle tree");
  }
  std::vector<bool> inside(g.vertex_count(), false);
  for (const Vertex v : structure.covered_vertices) inside[v] = true;
  std::vector<bool> triangle_edge(g.edge_count(), false);
  for (const auto& t : component) {
    for (const EdgeId e : t.edge_ids) triangle_edge[e] = true;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (inside[g.edge(e).u] && inside[g.edge(e).v] && !triangle_edge[e]) {
      throw InputError("color_triangle_tree: edge " + std::to_string(e) + " is a chord of the component");
    }
  }

  // Peel leaf triangles: each shares exactly one vertex with the rest.
  struct Peeled {
    std::size_t triangle;
    Vertex shared;
  };
  std::vector<std::size_t> remaining(component.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::vector<Peeled> peeled;
  while (remaining.size() > 1) {
    bool found = false;
    for (std::size_t r = 0; r < remaining.size() && !found; ++r) {
      const Triangle& t = component[remaining[r]];
      std::vector<Vertex> shared;
      for (const Vertex v : t.vertices) {
        for (const std::size_t other : remaining) {
          if (other != remaining[r] && component[other].contains(v)) {
            shared.push_back(v);
            break;
          }
        }
      }
      if (shared.size() == 1) {
        peeled.push_back({remaining[r], shared.front()});
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(r));
        found = true;
      }
    }
    if (!found) throw InvariantViolation("color_triangle_tree: no leaf triangle in a triangle tree");
  }

  const auto stars = star_edges(lg);
  std::map<EdgeId, Color> colors;

  // Base triangle u < v < w with e1 = uv, e2 = vw, e3 = uw.
  {
    const auto& [u, v, w] = component[remaining.front()].vertices;
    const EdgeId e1 = edge_between(g, u, v);
    const EdgeId e2 = edge_between(g, v, w);
    const EdgeId e3 = edge_between(g, u, w);
    color_star(lg, stars[u], {e1, 1, e3, 2, 2}, colors);
    color_star(lg, stars[v], {e2, 1, e1, 2, 2}, colors);
    color_star(lg, stars[w], {e3, 1, e2, 2, 2}, colors);
  }
  Color palette = 2;
  constexpr Color c1 = 1;
  constexpr Color c2 = 2;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    const Triangle& t = component[it->triangle];
    const Vertex u = it->shared;
    std::vector<Vertex> rest;
    for (const Vertex x : t.vertices) {
      if (x != u) rest.push_back(x);
    }
    const Vertex v = rest[0];
    const Vertex w = rest[1];
    const EdgeId e1 = edge_between(g, u, w);
    const EdgeId e2 = edge_between(g, u, v);
    const EdgeId e3 = edge_between(g, v, w);
    const Color fresh = palette + 1;
    color_star(lg, stars[w], {e1, fresh, e3, c1, fresh}, colors);
    color_star(lg, stars[v], {e2, fresh, e3, c2, fresh}, colors);
    palette = fresh;
  }

  ColoringPart part;
  std::vector<Color> cs;
  for (const auto& [le, c] : colors) {
    part.edges.push_back(le);
    cs.push_back(c);
  }
  part.coloring = EdgeColoring::from_colors(std::move(cs));
  part.coloring.k = palette;
  return part;
}

EdgeColoring color_single_triangle(const Graph& g, const LineGraphResult& lg) {
  const auto tris = enumerate_triangles(g);
  if (tris.size() != 1) throw InputError("color_single_triangle: graph must contain exactly one triangle");
  const Triangle& t = tris.front();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (std::find(t.edge_ids.begin(), t.edge_ids.end(), e) != t.edge_ids.end()) continue;
    const auto [a, b] = g.edge(e);
    const bool pendant_at_triangle = (t.contains(a) && g.degree(b) == 1) || (t.contains(b) && g.degree(a) == 1);
    if (!pendant_at_triangle) {
      throw InputError("color_single_triangle: edge " + std::to_string(e) + " is not pendant at the triangle");
    }
  }
  const auto part = color_triangle_tree(g, lg, std::span(&t, 1));
  if (part.edges.size() != lg.l_graph.edge_count()) throw InvariantViolation("color_single_triangle: partial coloring");
  return part.coloring;
}

Construction color_thm31(const Graph& g, const TrianglePacking& p) { return packing_construction(g, p, true); }

Construction color_thm32(const Graph& g, const TrianglePacking& p) { return packing_construction(g, p, false); }

Construction color_iterated_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw InputError("color_iterated_cubic: vertex " + std::to_string(v) + " is not of degree 3");
  }
  if (!is_connected(g) || g.vertex_count() == 0) throw InputError("color_iterated_cubic: graph must be connected");
  const auto lg = line_graph(g);
  const Graph& l = lg.l_graph;
  std::vector<Triangle> stars;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& s = lg.star_of[v];
    stars.push_back(triangle_from_edges(l, {edge_between(l, s[0], s[1]), edge_between(l, s[1], s[2]),
                                            edge_between(l, s[0], s[2])}));
  }
  auto packing = classify_structure(l, std::move(stars));
  auto c = color_thm32(l, packing);
  c.bounds.insert(c.bounds.begin(), {"n+1", g.vertex_count() + 1});
  c.certificate.bound_name = "n+1";
  c.certificate.bound_value = g.vertex_count() + 1;
  if (c.certificate.colors_used > c.certificate.bound_value) c.certificate.verified = false;
  return c;
}

std::size_t pendent_two_paths(const Graph& g) {
  std::size_t count = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1 && g.degree(g.incident(v).front().neighbor) == 2) ++count;
  }
  return count;
}

Construction color_iterated(const Graph& g) {
  if (!is_connected(g)) throw InputError("color_iterated: graph must be connected");
  const auto l1 = line_graph(g);
  if (l1.l_graph.edge_count() < 2) throw InputError("color_iterated: L^2 is trivial");
  const auto l2 = line_graph(l1.l_graph);

  std::vector<Color> fresh(l1.l_graph.vertex_count(), 0);
  Color next = 0;
  for (Vertex x = 0; x < l1.l_graph.vertex_count(); ++x) {
    if (l1.l_graph.degree(x) >= 2) fresh[x] = ++next;
  }
  std::vector<Color> colors(l2.l_graph.edge_count());
  for (EdgeId le = 0; le < colors.size(); ++le) colors[le] = fresh[l2.l_edge_star[le]];

  const std::size_t bound = g.edge_count() - pendent_two_paths(g);
  if (next != bound) throw InvariantViolation("color_iterated: inner vertex count of L(g) differs from m - m1");

  Construction c;
  c.target = l2.l_graph;
  c.coloring = EdgeColoring::from_colors(std::move(colors));
  c.bounds.push_back({"m-m1", bound});
  c.certificate.bound_name = "m-m1";
  c.certificate.bound_value = bound;
  return certify(std::move(c));
}

EdgeColoring project_coloring(const TransformTrace& trace, const EdgeColoring& coloring) {
  std::vector<Graph> graphs{trace.source};
  graphs.reserve(trace.steps.size() + 1);
  for (const auto& step : trace.steps) graphs.push_back(apply_step(graphs.back(), step));
  if (!(graphs.back() == trace.final_graph)) throw InputError("project_coloring: trace does not reproduce final graph");

  auto after = line_graph(graphs.back());
  if (coloring.size() != after.l_graph.edge_count()) {
    throw InputError("project_coloring: coloring is not total on L(final graph)");
  }
  std::vector<Color> current = coloring.color_of;
  for (std::size_t s = trace.steps.size(); s-- > 0;) {
    auto before = line_graph(graphs[s]);
    std::vector<Color> projected(before.l_graph.edge_count());
    const auto& step = trace.steps[s];
    for (EdgeId le = 0; le < projected.size(); ++le) {
      auto [a, b] = before.l_graph.edge(le);
      if (const auto* op1 = std::get_if<Op1Step>(&step)) {
        const Vertex x = before.l_edge_star[le];
        const auto remap = [&](Vertex lv) {
          if (before.vertex_to_edge[lv] != op1->edge) return lv;
          return after.edge_to_vertex[x == op1->u ? op1->edge : op1->v_edge];
        };
        const auto mapped = after.l_graph.find_edge(remap(a), remap(b));
        if (!mapped) throw InvariantViolation("project_coloring: operation 1 lost an L-edge");
        projected[le] = current[*mapped];
      } else {
        const auto mapped = after.l_graph.find_edge(a, b);
        projected[le] = mapped ? current[*mapped] : 1;
      }
    }
    current = std::move(projected);
    after = std::move(before);
  }
  return EdgeColoring::from_colors(std::move(current));
}

}  // namespace rainbow
