#include "rainbow/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "rainbow/coloring.hpp"
#include "rainbow/line_graph.hpp"

namespace rainbow {

namespace {

using Mask = std::uint64_t;

// One bit per distinct color, assigned in increasing color order.
std::vector<Mask> color_bits(const Graph& g, const EdgeColoring& col) {
  if (col.size() != g.edge_count()) {
    throw InputError("coloring covers " + std::to_string(col.size()) + " edges, graph has " +
                     std::to_string(g.edge_count()));
  }
  std::vector<Color> palette = col.color_of;
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.size() > kMaxVerifierColors) {
    throw ResourceLimitError("verifier: " + std::to_string(palette.size()) + " colors exceed the cap of " +
                             std::to_string(kMaxVerifierColors));
  }
  std::vector<Mask> bits(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto idx = std::lower_bound(palette.begin(), palette.end(), col.color_of[e]) - palette.begin();
    bits[e] = Mask{1} << idx;
  }
  return bits;
}

// Smallest target above `source` that no rainbow walk from `source` reaches.
std::optional<Vertex> first_unreached(const Graph& g, const std::vector<Mask>& bits, Vertex source) {
  const std::size_t n = g.vertex_count();
  std::size_t remaining = n - 1 - source;
  if (remaining == 0) return std::nullopt;

  std::vector<bool> reached(n, false);
  std::vector<std::unordered_set<Mask>> seen(n);
  std::vector<std::pair<Vertex, Mask>> stack{{source, 0}};
  reached[source] = true;
  seen[source].insert(0);
  while (!stack.empty() && remaining > 0) {
    const auto [v, mask] = stack.back();
    stack.pop_back();
    for (const auto& inc : g.incident(v)) {
      const Mask bit = bits[inc.edge];
      if (mask & bit) continue;
      const Mask next = mask | bit;
      if (!seen[inc.neighbor].insert(next).second) continue;
      if (!reached[inc.neighbor]) {
        reached[inc.neighbor] = true;
        if (inc.neighbor > source) --remaining;
      }
      stack.emplace_back(inc.neighbor, next);
    }
  }
  if (remaining == 0) return std::nullopt;
  for (Vertex t = source + 1; t < n; ++t) {
    if (!reached[t]) return t;
  }
  return std::nullopt;
}

RainbowCheck from_per_source(const std::vector<std::optional<Vertex>>& failures) {
  for (Vertex s = 0; s < failures.size(); ++s) {
    if (failures[s]) return {false, std::make_pair(s, *failures[s])};
  }
  return {true, std::nullopt};
}

}  // namespace

RainbowCheck is_rainbow_connected_serial(const Graph& g, const EdgeColoring& col) {
  const auto bits = color_bits(g, col);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (const auto t = first_unreached(g, bits, s)) return {false, std::make_pair(s, *t)};
  }
  return {true, std::nullopt};
}

RainbowCheck is_rainbow_connected(const Graph& g, const EdgeColoring& col) {
  const auto bits = color_bits(g, col);
  const auto n = static_cast<std::ptrdiff_t>(g.vertex_count());
  std::vector<std::optional<Vertex>> failures(g.vertex_count());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    failures[s] = first_unreached(g, bits, static_cast<Vertex>(s));
  }
  return from_per_source(failures);
}

namespace {

class ExactSearch {
public:
  ExactSearch(const Graph& g, std::size_t k, Execution exec, std::chrono::steady_clock::time_point deadline)
      : g_(g), k_(k), exec_(exec), deadline_(deadline), current_(g.edge_count(), 0) {}

  enum class Outcome { found, exhausted, timed_out };

  Outcome run() {
    if (descend(0, 0)) return outcome_;
    if (!batch_.empty() && flush()) return outcome_;
    return Outcome::exhausted;
  }

  std::size_t checked() const { return checked_; }
  const std::optional<EdgeColoring>& witness() const { return witness_; }

private:
  static constexpr std::size_t kBatch = 2048;

  // Restricted growth strings with exactly k_ blocks; returns true to stop.
  bool descend(std::size_t i, Color used) {
    const std::size_t m = current_.size();
    if (i == m) {
      if (used != k_) return false;
      batch_.push_back(EdgeColoring::from_colors(current_));
      return batch_.size() == kBatch && flush();
    }
    if (m - i < k_ - used) return false;
    for (Color c = 1; c <= used; ++c) {
      current_[i] = c;
      if (descend(i + 1, used)) return true;
    }
    if (used < k_) {
      current_[i] = used + 1;
      if (descend(i + 1, used + 1)) return true;
    }
    return false;
  }

  bool flush() {
    const auto count = static_cast<std::ptrdiff_t>(batch_.size());
    std::vector<char> ok(batch_.size(), 0);
    if (exec_ == Execution::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t i = 0; i < count; ++i) ok[i] = is_rainbow_connected_serial(g_, batch_[i]).connected;
    } else {
      for (std::ptrdiff_t i = 0; i < count; ++i) ok[i] = is_rainbow_connected_serial(g_, batch_[i]).connected;
    }
    checked_ += batch_.size();
    for (std::size_t i = 0; i < batch_.size(); ++i) {
      if (ok[i]) {
        witness_ = batch_[i];
        outcome_ = Outcome::found;
        return true;
      }
    }
    batch_.clear();
    if (std::chrono::steady_clock::now() > deadline_) {
      outcome_ = Outcome::timed_out;
      return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  Execution exec_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<Color> current_;
  std::vector<EdgeColoring> batch_;
  std::size_t checked_ = 0;
  std::optional<EdgeColoring> witness_;
  Outcome outcome_ = Outcome::exhausted;
};

}  // namespace

ExactResult exact_rc(const Graph& g, const ExactLimits& limits, Execution exec) {
  if (g.vertex_count() < 2) throw InputError("exact_rc: graph must have at least two vertices");
  const auto diam = diameter(g);
  if (!diam) throw InputError("exact_rc: graph must be connected");

  ExactResult out;
  out.lower = std::max<std::size_t>(*diam, 1);
  out.upper = g.vertex_count() - 1;
  if (g.edge_count() > limits.max_edges) {
    out.limits_hit = true;
    return out;
  }
  const auto deadline = std::chrono::steady_clock::now() + limits.budget;
  for (std::size_t k = out.lower; k <= out.upper; ++k) {
    if (k > kMaxVerifierColors) break;
    ExactSearch search(g, k, exec, deadline);
    const auto outcome = search.run();
    out.colorings_checked += search.checked();
    if (outcome == ExactSearch::Outcome::found) {
      out.value = k;
      out.lower = out.upper = k;
      out.witness = search.witness();
      return out;
    }
    if (outcome == ExactSearch::Outcome::timed_out) {
      out.lower = k;
      out.limits_hit = true;
      return out;
    }
    out.lower = k + 1;
  }
  // Unreachable for connected graphs: a spanning tree coloring uses n-1 colors.
  throw InvariantViolation("exact_rc: no rainbow coloring found up to n-1 colors");
}

std::size_t rc_lower_bound(const Graph& g) {
  const auto d = diameter(g);
  if (!d) throw InputError("rc_lower_bound: graph must be connected");
  return *d;
}

const char* to_string(EqualityVerdict v) {
  switch (v) {
    case EqualityVerdict::equality:
      return "equality";
    case EqualityVerdict::strict:
      return "strict";
    case EqualityVerdict::undecided:
      return "undecided";
  }
  return "unknown";
}

IteratedEquality check_iterated_equality(const Graph& g, const ExactLimits& limits) {
  IteratedEquality out;
  out.path_predicate = is_path(g, 3);
  const auto construction = color_iterated(g);
  out.construction_colors = construction.certificate.colors_used;
  const auto result = exact_rc(construction.target, limits);
  out.exact = result.value;
  if (!result.value) {
    out.verdict = EqualityVerdict::undecided;
  } else if (*result.value == out.construction_colors) {
    out.verdict = EqualityVerdict::equality;
  } else if (*result.value < out.construction_colors) {
    out.verdict = EqualityVerdict::strict;
  } else {
    throw InvariantViolation("check_iterated_equality: verified construction beats the exact optimum");
  }
  return out;
}

}  // namespace rainbow
