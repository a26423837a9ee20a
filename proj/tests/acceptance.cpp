// Acceptance suite: one PASS/FAIL line per criterion, each with its own
// wall-clock limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <variant>

#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/families.hpp"
#include "rainbow/line_graph.hpp"
#include "rainbow/triangles.hpp"
#include "rainbow/verifier.hpp"

using namespace rainbow;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Graph fam(const char* name, FamilyParams params = {}) { return gen_family(name, params); }

// Exact packing under the triangle cap, greedy counterpart above it.
TrianglePacking default_packing(const Graph& g, bool forest) {
  try {
    return pack_edge_disjoint(g, forest ? PackingMode::forest_exact : PackingMode::exact);
  } catch (const ResourceLimitError&) {
    return pack_edge_disjoint(g, forest ? PackingMode::forest_greedy : PackingMode::greedy);
  }
}

std::vector<Graph> property_ensemble() { return oracle::gnp_ensemble(100, 4, 9, {0.3, 0.5}, 2024); }

bool rainbow(const Graph& g, const EdgeColoring& col) { return is_rainbow_connected(g, col).connected; }

void sharpness_thm31(Outcome& o) {
  for (std::size_t t = 2; t <= 4; ++t) {
    const Graph g = fam("example31", {{"t", t}});
    const auto c = color_thm31(g, pack_edge_disjoint(g, PackingMode::forest_exact));
    const auto diam = diameter(c.target);
    const std::string tag = "t=" + std::to_string(t);
    o.require(diam == 2 * t, tag + " diameter(L) = 2t");
    o.require(c.certificate.colors_used == 2 * t, tag + " colors = 2t");
    o.require(rainbow(c.target, c.coloring), tag + " verified");
    o.detail << tag << ": diam " << diam.value_or(0) << ", colors " << c.certificate.colors_used << "; ";
  }
}

void sharpness_thm32(Outcome& o) {
  for (std::size_t k = 2; k <= 6; ++k) {
    const Graph g = fam("example32", {{"k", k}});
    const auto p = pack_edge_disjoint(g, PackingMode::exact);
    const auto c = color_thm32(g, p);
    const auto diam = diameter(c.target);
    const std::string tag = "k=" + std::to_string(k);
    o.require(p.n2_prime == 1 && p.c == 1, tag + " n2' = 1, c = 1");
    o.require(diam == k + 1, tag + " diameter(L) = k+1");
    o.require(c.certificate.colors_used <= k + 1, tag + " colors <= k+1");
    o.require(rainbow(c.target, c.coloring), tag + " verified");
    o.detail << tag << ": " << c.certificate.colors_used << "; ";
  }
}

void oracle_calibration(Outcome& o) {
  for (std::size_t n : {4, 5}) {
    o.require(exact_rc(fam("complete", {{"n", n}})).value == std::size_t{1}, "K" + std::to_string(n));
  }
  std::size_t trees = 0;
  for (const auto& g : oracle::connected_graphs_up_to(6)) {
    if (!is_tree(g) || g.vertex_count() > 7) continue;
    ++trees;
    const auto r = exact_rc(g);
    o.require(r.value == g.vertex_count() - 1, "tree on " + std::to_string(g.vertex_count()) + " vertices");
  }
  // Non-isomorphic trees on 2..7 vertices: 1 + 1 + 2 + 3 + 6 + 11.
  o.require(trees == 24, "tree count");
  for (std::size_t k = 4; k <= 8; ++k) {
    o.require(exact_rc(fam("cycle", {{"n", k}})).value == (k + 1) / 2, "C" + std::to_string(k));
  }
  o.detail << trees << " trees, K4/K5, C4..C8; ";
}

void property_thm31(Outcome& o) {
  std::size_t failures = 0;
  for (const auto& g : property_ensemble()) {
    const auto p = default_packing(g, true);
    const auto c = color_thm31(g, p);
    const bool ok = p.all_forest() && rainbow(c.target, c.coloring) &&
                    c.certificate.colors_used <= degree_profile(g).n2 - p.t && c.certificate.verified;
    failures += !ok;
  }
  o.require(failures == 0, std::to_string(failures) + " failing instances");
  o.detail << "100 instances, " << failures << " failures; ";
}

void property_thm32(Outcome& o) {
  std::size_t failures = 0, op_total = 0;
  for (const auto& g : property_ensemble()) {
    const auto p = default_packing(g, false);
    const auto c = color_thm32(g, p);
    const auto n2 = degree_profile(g).n2;
    bool ok = rainbow(c.target, c.coloring) && c.certificate.verified;
    ok = ok && c.certificate.colors_used <= p.t + p.n2_prime + p.c;
    ok = ok && c.certificate.colors_used <= n2 + p.op - p.t;

    const auto r = build_transformed(g, p);
    const auto replayed_op2 = static_cast<std::size_t>(std::count_if(
        r.trace.steps.begin(), r.trace.steps.end(), [](const TransformStep& s) { return std::holds_alternative<Op2Step>(s); }));
    ok = ok && p.op == 2 * p.t + p.c - p.covered_vertices.size();
    ok = ok && replayed_op2 == p.op && replay(r.trace) == r.trace.final_graph;
    ok = ok && r.final_packing.op == 0;
    op_total += p.op;
    failures += !ok;
  }
  o.require(failures == 0, std::to_string(failures) + " failing instances");
  o.detail << "100 instances, total op " << op_total << ", " << failures << " failures; ";
}

void iterated_cubic(Outcome& o) {
  const std::vector<std::tuple<std::string, Graph, std::size_t>> cases{
      {"K4", fam("complete", {{"n", 4}}), 5},
      {"K3,3", fam("complete_bipartite", {{"a", 3}, {"b", 3}}), 7},
      {"Petersen", fam("petersen"), 11}};
  for (const auto& [name, g, bound] : cases) {
    const auto c = color_iterated_cubic(g);
    o.require(c.certificate.colors_used <= bound, name + " bound");
    o.require(rainbow(c.target, c.coloring), name + " verified on L2");
    o.detail << name << ": " << c.certificate.colors_used << "/" << bound << "; ";
  }
}

void iterated_equality(Outcome& o) {
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto r = check_iterated_equality(fam("path", {{"n", n}}));
    const std::string tag = "P" + std::to_string(n);
    o.require(r.verdict == EqualityVerdict::equality, tag + " equality");
    o.require(r.construction_colors == n - 3 && r.exact == n - 3, tag + " = n-3");
    o.require(r.path_predicate, tag + " predicate");
  }
  const std::vector<std::pair<std::string, Graph>> strict{
      {"C4", fam("cycle", {{"n", 4}})},
      {"K1,3", fam("star", {{"n", 3}})},
      {"spider(3,2)", fam("spider", {{"legs", 3}, {"length", 2}})}};
  for (const auto& [name, g] : strict) {
    const auto r = check_iterated_equality(g);
    o.require(r.verdict == EqualityVerdict::strict, name + " strict");
    o.require(!r.path_predicate, name + " predicate");
    o.detail << name << ": " << r.exact.value_or(0) << " < " << r.construction_colors << "; ";
  }
}

// Random partition of the edges into connected pieces grown from a seed edge.
std::vector<std::vector<EdgeId>> connected_edge_partition(const Graph& g, Rng& rng) {
  std::vector<bool> taken(g.edge_count(), false);
  std::vector<std::vector<EdgeId>> parts;
  for (EdgeId start = 0; start < g.edge_count(); ++start) {
    if (taken[start]) continue;
    const std::size_t target = 1 + uniform_below(rng, 6);
    std::vector<EdgeId> part{start};
    taken[start] = true;
    while (part.size() < target) {
      std::vector<EdgeId> frontier;
      for (auto e : part)
        for (auto end : {g.edge(e).u, g.edge(e).v})
          for (const auto& inc : g.incident(end))
            if (!taken[inc.edge]) frontier.push_back(inc.edge);
      if (frontier.empty()) break;
      const EdgeId pick = frontier[uniform_below(rng, frontier.size())];
      taken[pick] = true;
      part.push_back(pick);
    }
    std::sort(part.begin(), part.end());
    parts.push_back(part);
  }
  return parts;
}

void combine_and_project(Outcome& o) {
  const auto graphs = oracle::gnp_ensemble(50, 4, 9, {0.3, 0.5}, 7);
  Rng rng(99);
  std::size_t combine_fail = 0, project_fail = 0, traces_with_ops = 0;
  for (const auto& g : graphs) {
    // Each piece gets its own rainbow coloring: exact when small, a
    // spanning-tree coloring otherwise.
    std::vector<ColoringPart> parts;
    bool pieces_ok = true;
    for (const auto& edges : connected_edge_partition(g, rng)) {
      const auto sub = induced_by_edges(g, edges);
      EdgeColoring col = spanning_tree_coloring(sub.graph);
      if (sub.graph.vertex_count() >= 2 && sub.graph.edge_count() <= 6) col = *exact_rc(sub.graph).witness;
      pieces_ok = pieces_ok && rainbow(sub.graph, col);
      parts.push_back({sub.edge_to_parent, col});
    }
    combine_fail += !(pieces_ok && rainbow(g, combine_colorings(g.edge_count(), parts)));

    const auto p = pack_edge_disjoint(g, PackingMode::greedy);
    const auto r = build_transformed(g, p);
    traces_with_ops += !r.trace.steps.empty();
    const auto l_final = line_graph(r.trace.final_graph).l_graph;
    const auto projected = project_coloring(r.trace, spanning_tree_coloring(l_final));
    project_fail += !rainbow(line_graph(g).l_graph, projected);
  }
  o.require(combine_fail == 0, "combined coloring not rainbow");
  o.require(project_fail == 0, "projected coloring not rainbow");
  o.require(traces_with_ops > 0, "no instance exercised a transform");
  o.detail << "50 instances, " << traces_with_ops << " nonempty traces, failures " << combine_fail << "+"
           << project_fail << "; ";
}

void double_implementation(Outcome& o) {
  std::size_t graphs = 0, colorings = 0, mismatches = 0;
  for (const auto& g : oracle::connected_graphs_up_to(6)) {
    ++graphs;
    oracle::for_each_coloring(g.edge_count(), 3, [&](const std::vector<Color>& colors) {
      const auto col = EdgeColoring::from_colors(colors);
      const auto naive = oracle::naive_failing_pair(g, colors);
      const auto fast = is_rainbow_connected(g, col);
      const auto serial = is_rainbow_connected_serial(g, col);
      ++colorings;
      mismatches += fast.connected != !naive.has_value() || fast.failing_pair != naive ||
                    serial.connected != fast.connected || serial.failing_pair != fast.failing_pair;
    });
  }
  // Connected graphs with 1..6 edges up to isomorphism: 1 + 1 + 3 + 5 + 12 + 30.
  o.require(graphs == 52, "graph count");
  o.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
  o.detail << graphs << " graphs, " << colorings << " colorings, " << mismatches << " mismatches; ";
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "line graph bound n2-t is sharp on the chained-triangle family", 5, sharpness_thm31},
      {2, "line graph bound t+n2'+c is sharp on the triangle path family", 10, sharpness_thm32},
      {3, "exact oracle calibration", 60, oracle_calibration},
      {4, "forest packing bound over 100 random graphs", 120, property_thm31},
      {5, "general packing bounds and op accounting over 100 random graphs", 120, property_thm32},
      {6, "iterated line graph of cubic graphs", 30, iterated_cubic},
      {7, "iterated line graph equality characterization", 60, iterated_equality},
      {8, "combination and projection properties", 60, combine_and_project},
      {9, "verifier vs simple-path enumeration, all graphs up to 6 edges", 120, double_implementation},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.limit_s, "time limit");
    failed += !o.pass;
    std::printf("criterion %d: %s (%.2fs / %.0fs) %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", secs, c.limit_s, c.name,
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
