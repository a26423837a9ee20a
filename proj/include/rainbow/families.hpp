#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using FamilyParams = std::map<std::string, std::size_t>;

/// Deterministic named families. Vertex numbering:
///   example31(t)    triangle i is {3i, 3i+1, 3i+2}; bridge (3i+2, 3i+3)
///   example32(k)    u_i = 2(i-1), v_i = 2(i-1)+1, triangles {u_i, v_i, u_i+1}
///                   for i < k, then the pendent path u_k - (2k-1) - 2k
///   path(n), cycle(n), complete(n), star(n) with center 0 and n leaves,
///   complete_bipartite(a, b) with sides 0..a-1 and a..a+b-1,
///   petersen        outer cycle 0..4, inner pentagram 5..9, spokes i - i+5
///   triangle_ring(r) shared vertices 0..r-1, apexes r..2r-1; triangle i is
///                   {i, r+i, (i+1) mod r}
///   friendship(f)   hub 0, triangles {0, 2i-1, 2i}
///   spider(legs, length) center 0, legs as consecutive paths
Graph gen_family(std::string_view name, const FamilyParams& params);

std::vector<std::string> family_names();

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits; portable across
/// standard libraries, unlike std::uniform_real_distribution.
double uniform01(Rng& rng);

/// Uniform integer in [0, bound) by rejection.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Connected G(n, p) sample; disconnected draws are discarded.
Graph random_gnp(std::size_t n, double p, Rng& rng);

/// Connected simple cubic graph from the configuration model with rejection.
Graph random_cubic(std::size_t n, Rng& rng);

}  // namespace rainbow
