#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <utility>

#include "rainbow/edge_coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr std::size_t kMaxVerifierColors = 64;

struct RainbowCheck {
  bool connected = false;
  // Lexicographically smallest pair (a < b) without a rainbow path.
  std::optional<std::pair<Vertex, Vertex>> failing_pair;

  explicit operator bool() const { return connected; }
};

/// Exact rainbow-connectivity test. For every source it explores
/// (vertex, used-color-set) states, each at most once; a walk with distinct
/// edge colors always contains a rainbow path between its ends, so the state
/// graph need not track simple paths.
///
/// Sources are processed in parallel with OpenMP. Throws ResourceLimitError
/// when the coloring uses more than kMaxVerifierColors distinct colors.
RainbowCheck is_rainbow_connected(const Graph& g, const EdgeColoring& col);

/// Single-threaded reference with the same contract.
RainbowCheck is_rainbow_connected_serial(const Graph& g, const EdgeColoring& col);

struct ExactLimits {
  std::size_t max_edges = 12;
  std::chrono::milliseconds budget{60'000};
};

struct ExactResult {
  std::optional<std::size_t> value;
  // Bracket [lower, upper] on rc; equal to *value when the search finished.
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool limits_hit = false;
  std::size_t colorings_checked = 0;
  // First rainbow coloring found with value colors.
  std::optional<EdgeColoring> witness;
};

enum class Execution { serial, parallel };

/// rc(g) by exhaustion: for k = max(diam, 1), k+1, ... enumerate colorings
/// that use exactly k colors, one per partition of the edge set (restricted
/// growth strings), and stop at the first rainbow one. With
/// Execution::parallel each batch of candidates is checked across threads;
/// the accepted k is the same either way.
ExactResult exact_rc(const Graph& g, const ExactLimits& limits = {}, Execution exec = Execution::parallel);

/// rc(g) >= diam(g). Throws InputError when g is disconnected.
std::size_t rc_lower_bound(const Graph& g);

enum class EqualityVerdict { equality, strict, undecided };

const char* to_string(EqualityVerdict v);

struct IteratedEquality {
  EqualityVerdict verdict = EqualityVerdict::undecided;
  std::size_t construction_colors = 0;  // m - m1
  std::optional<std::size_t> exact;     // rc(L^2(g)) when the oracle finished
  bool path_predicate = false;          // g is a path of length >= 3
};

/// Compares the star-clique construction for L^2(g) against the exact
/// oracle and reports whether g is a path of length at least three.
IteratedEquality check_iterated_equality(const Graph& g, const ExactLimits& limits = {});

}  // namespace rainbow
