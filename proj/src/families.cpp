#include "rainbow/families.hpp"

#include <algorithm>

namespace rainbow {

namespace {

std::size_t require(const FamilyParams& params, const std::string& key, std::size_t min) {
  const auto it = params.find(key);
  if (it == params.end()) throw InputError("family parameter '" + key + "' is required");
  if (it->second < min) {
    throw InputError("family parameter '" + key + "' must be at least " + std::to_string(min));
  }
  return it->second;
}

Graph from_pairs(std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return from_pairs(n, std::move(e));
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return from_pairs(n, std::move(e));
}

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return from_pairs(n, std::move(e));
}

Graph example31(std::size_t t) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < t; ++i) {
    const Vertex a = 3 * i;
    e.push_back({a, a + 1});
    e.push_back({a + 1, a + 2});
    e.push_back({a, a + 2});
    if (i + 1 < t) e.push_back({a + 2, a + 3});
  }
  return from_pairs(3 * t, std::move(e));
}

Graph example32(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < k; ++i) {
    const Vertex u = 2 * i;
    const Vertex v = u + 1;
    const Vertex next = u + 2;
    e.push_back({u, v});
    e.push_back({v, next});
    e.push_back({u, next});
  }
  const Vertex uk = 2 * (k - 1);
  e.push_back({uk, 2 * k - 1});
  e.push_back({2 * k - 1, 2 * k});
  return from_pairs(2 * k + 1, std::move(e));
}

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
    e.push_back({i, i + 5});
  }
  return from_pairs(10, std::move(e));
}

Graph triangle_ring(std::size_t r) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < r; ++i) {
    const Vertex next = (i + 1) % r;
    e.push_back({i, r + i});
    e.push_back({r + i, next});
    e.push_back({std::min(i, next), std::max(i, next)});
  }
  return from_pairs(2 * r, std::move(e));
}

Graph friendship(std::size_t f) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= f; ++i) {
    e.push_back({0, 2 * i - 1});
    e.push_back({2 * i - 1, 2 * i});
    e.push_back({0, 2 * i});
  }
  return from_pairs(2 * f + 1, std::move(e));
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.push_back({0, i});
  return from_pairs(leaves + 1, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) e.push_back({i, a + j});
  }
  return from_pairs(a + b, std::move(e));
}

Graph spider(std::size_t legs, std::size_t length) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t s = 0; s < length; ++s) {
      e.push_back({prev, next});
      prev = next++;
    }
  }
  return from_pairs(next, std::move(e));
}

}  // namespace

std::vector<std::string> family_names() {
  return {"example31", "example32", "path",     "cycle",      "complete", "petersen", "triangle_ring",
          "friendship", "star",     "complete_bipartite", "spider"};
}

Graph gen_family(std::string_view name, const FamilyParams& params) {
  if (name == "example31") return example31(require(params, "t", 1));
  if (name == "example32") return example32(require(params, "k", 2));
  if (name == "path") return path(require(params, "n", 1));
  if (name == "cycle") return cycle(require(params, "n", 3));
  if (name == "complete") return complete(require(params, "n", 1));
  if (name == "petersen") return petersen();
  if (name == "triangle_ring") return triangle_ring(require(params, "r", 3));
  if (name == "friendship") return friendship(require(params, "f", 1));
  if (name == "star") return star(require(params, "n", 1));
  if (name == "complete_bipartite") return complete_bipartite(require(params, "a", 1), require(params, "b", 1));
  if (name == "spider") return spider(require(params, "legs", 1), require(params, "length", 1));
  throw InputError("unknown family '" + std::string(name) + "'");
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: empty range");
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

Graph random_gnp(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw InputError("gnp: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("gnp: p must lie in [0, 1]");
  if (n > 1 && p == 0.0) throw InputError("gnp: p = 0 never yields a connected graph");
  constexpr int kAttempts = 100'000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n; ++j) {
        if (uniform01(rng) < p) e.push_back({i, j});
      }
    }
    Graph g(n, std::move(e));
    if (is_connected(g)) return g;
  }
  throw ResourceLimitError("gnp: no connected sample within the attempt limit");
}

Graph random_cubic(std::size_t n, Rng& rng) {
  if (n < 4 || n % 2 != 0) throw InputError("random_cubic: n must be even and at least 4");
  constexpr int kAttempts = 100'000;
  std::vector<Vertex> stubs;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    stubs.clear();
    for (Vertex v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
    std::vector<Edge> e;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const Vertex a = std::min(stubs[i], stubs[i + 1]);
      const Vertex b = std::max(stubs[i], stubs[i + 1]);
      if (a == b || std::find(e.begin(), e.end(), Edge{a, b}) != e.end()) simple = false;
      e.push_back({a, b});
    }
    if (!simple) continue;
    Graph g(n, std::move(e));
    if (is_connected(g)) return g;
  }
  throw ResourceLimitError("random_cubic: no simple connected sample within the attempt limit");
}

}  // namespace rainbow
