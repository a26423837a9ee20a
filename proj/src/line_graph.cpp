#include "rainbow/line_graph.hpp"

#include <algorithm>
#include <numeric>

namespace rainbow {

LineGraphResult line_graph(const Graph& g) {
  LineGraphResult out;
  out.edge_to_vertex.resize(g.edge_count());
  out.vertex_to_edge.resize(g.edge_count());
  std::iota(out.edge_to_vertex.begin(), out.edge_to_vertex.end(), Vertex{0});
  std::iota(out.vertex_to_edge.begin(), out.vertex_to_edge.end(), EdgeId{0});

  out.star_of.resize(g.vertex_count());
  std::vector<Edge> l_edges;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto inc = g.incident(v);
    auto& star = out.star_of[v];
    for (const auto& i : inc) star.push_back(out.edge_to_vertex[i.edge]);
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) {
        l_edges.push_back({star[a], star[b]});
        out.l_edge_star.push_back(v);
      }
    }
  }
  out.l_graph = Graph(g.edge_count(), std::move(l_edges));
  return out;
}

std::vector<LineGraphResult> iterated_line_graph(const Graph& g, std::size_t k) {
  if (k == 0) throw InputError("iterated_line_graph: k must be at least 1");
  std::vector<LineGraphResult> chain;
  chain.reserve(k);
  const Graph* current = &g;
  for (std::size_t i = 0; i < k; ++i) {
    if (current->edge_count() == 0) {
      throw InputError("iterated_line_graph: intermediate graph " + std::to_string(i) + " has no edges");
    }
    chain.push_back(line_graph(*current));
    current = &chain.back().l_graph;
  }
  return chain;
}

namespace {

class BronKerbosch {
public:
  BronKerbosch(const Graph& g, std::size_t cap) : g_(g), cap_(cap), adj_(g.vertex_count()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (const auto& inc : g.incident(v)) adj_[v].push_back(inc.neighbor);
      std::sort(adj_[v].begin(), adj_[v].end());
    }
  }

  std::vector<std::vector<Vertex>> run() {
    std::vector<Vertex> all(g_.vertex_count());
    std::iota(all.begin(), all.end(), Vertex{0});
    std::vector<Vertex> r;
    expand(r, all, {});
    std::sort(cliques_.begin(), cliques_.end());
    return std::move(cliques_);
  }

private:
  std::vector<Vertex> neighbors_in(Vertex v, const std::vector<Vertex>& set) const {
    std::vector<Vertex> out;
    std::set_intersection(set.begin(), set.end(), adj_[v].begin(), adj_[v].end(), std::back_inserter(out));
    return out;
  }

  void expand(std::vector<Vertex>& r, std::vector<Vertex> p, std::vector<Vertex> x) {
    if (p.empty() && x.empty()) {
      if (cliques_.size() >= cap_) {
        throw ResourceLimitError("clique_graph: more than " + std::to_string(cap_) + " maximal cliques");
      }
      auto clique = r;
      std::sort(clique.begin(), clique.end());
      cliques_.push_back(std::move(clique));
      return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    Vertex pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
      for (const Vertex u : *set) {
        const std::size_t hits = neighbors_in(u, p).size();
        if (hits > best) {
          best = hits;
          pivot = u;
        }
      }
    }
    std::vector<Vertex> candidates;
    std::set_difference(p.begin(), p.end(), adj_[pivot].begin(), adj_[pivot].end(), std::back_inserter(candidates));
    for (const Vertex v : candidates) {
      r.push_back(v);
      expand(r, neighbors_in(v, p), neighbors_in(v, x));
      r.pop_back();
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<Vertex>> cliques_;
};

}  // namespace

CliqueGraphResult clique_graph(const Graph& g, std::size_t cap) {
  CliqueGraphResult out;
  out.maximal_cliques = BronKerbosch(g, cap).run();
  const auto& cl = out.maximal_cliques;
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < cl.size(); ++a) {
    for (std::size_t b = a + 1; b < cl.size(); ++b) {
      std::vector<Vertex> common;
      std::set_intersection(cl[a].begin(), cl[a].end(), cl[b].begin(), cl[b].end(), std::back_inserter(common));
      if (!common.empty()) edges.push_back({a, b});
    }
  }
  out.k_graph = Graph(cl.size(), std::move(edges));
  return out;
}

}  // namespace rainbow
