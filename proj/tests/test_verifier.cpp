#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rainbow/families.hpp"
#include "rainbow/line_graph.hpp"
#include "rainbow/verifier.hpp"

using namespace rainbow;

namespace {

Graph fam(const char* name, FamilyParams params = {}) { return gen_family(name, params); }

}  // namespace

TEST_CASE("is_rainbow_connected examples") {
  const Graph k4 = fam("complete", {{"n", 4}});
  CHECK(is_rainbow_connected(k4, EdgeColoring::from_colors(std::vector<Color>(6, 1))).connected);

  const auto p3 = is_rainbow_connected(fam("path", {{"n", 3}}), EdgeColoring::from_colors({1, 1}));
  CHECK_FALSE(p3.connected);
  CHECK(p3.failing_pair == std::make_pair(Vertex{0}, Vertex{2}));

  CHECK(is_rainbow_connected(fam("cycle", {{"n", 4}}), EdgeColoring::from_colors({1, 2, 1, 2})).connected);

  CHECK_THROWS_AS(is_rainbow_connected(k4, EdgeColoring::from_colors({1, 1})), InputError);

  // Over the cap of distinct colors.
  std::vector<Color> many(66);
  for (std::size_t i = 0; i < many.size(); ++i) many[i] = static_cast<Color>(i + 1);
  CHECK_THROWS_AS(is_rainbow_connected(fam("complete", {{"n", 12}}), EdgeColoring::from_colors(many)),
                  ResourceLimitError);
  // Exactly at the cap is still fine.
  std::vector<Color> sixty_four(64);
  for (std::size_t i = 0; i < sixty_four.size(); ++i) sixty_four[i] = static_cast<Color>(1000 + i);
  CHECK(is_rainbow_connected(fam("path", {{"n", 65}}), EdgeColoring::from_colors(sixty_four)).connected);
}

TEST_CASE("verifier agrees with simple-path enumeration up to eight edges") {
  // Seven and eight edge graphs are sampled; smaller sizes are exhaustive in
  // the acceptance suite.
  Rng rng(41);
  const auto graphs = oracle::gnp_ensemble(80, 4, 8, {0.3, 0.45}, 41);
  std::size_t checked = 0;
  for (const auto& g : graphs) {
    if (g.edge_count() < 7 || g.edge_count() > 8) continue;
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Color> colors(g.edge_count());
      const Color k = 2 + static_cast<Color>(uniform_below(rng, 4));
      for (auto& c : colors) c = 1 + static_cast<Color>(uniform_below(rng, k));
      const auto col = EdgeColoring::from_colors(colors);
      const auto naive = oracle::naive_failing_pair(g, colors);
      const auto fast = is_rainbow_connected(g, col);
      const auto serial = is_rainbow_connected_serial(g, col);
      CHECK(fast.connected == !naive.has_value());
      CHECK(fast.failing_pair == naive);
      CHECK(serial.connected == fast.connected);
      CHECK(serial.failing_pair == fast.failing_pair);
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("exact_rc examples") {
  CHECK(exact_rc(fam("cycle", {{"n", 5}})).value == std::size_t{3});
  CHECK(exact_rc(fam("path", {{"n", 5}})).value == std::size_t{4});
  CHECK(exact_rc(fam("complete", {{"n", 4}})).value == std::size_t{1});

  const auto r = exact_rc(fam("cycle", {{"n", 6}}));
  REQUIRE(r.witness);
  CHECK(r.witness->colors_used() == 3);
  CHECK(is_rainbow_connected(fam("cycle", {{"n", 6}}), *r.witness).connected);
  CHECK(r.lower == 3);
  CHECK(r.upper == 3);
  CHECK_FALSE(r.limits_hit);

  CHECK_THROWS_AS(exact_rc(oracle::make(1, {})), InputError);
  CHECK_THROWS_AS(exact_rc(oracle::make(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("exact_rc reports a bracket on limits") {
  const Graph big = fam("petersen");
  const auto r = exact_rc(big, {12, std::chrono::milliseconds{1000}});
  CHECK(r.limits_hit);
  CHECK_FALSE(r.value.has_value());
  CHECK(r.lower == 2);
  CHECK(r.upper >= r.lower);
  CHECK(r.upper <= big.vertex_count() - 1);

  const auto timed = exact_rc(fam("cycle", {{"n", 12}}), {12, std::chrono::milliseconds{0}});
  CHECK(timed.limits_hit);
  CHECK(timed.lower >= 6);
}

TEST_CASE("exact_rc serial and parallel agree") {
  const auto graphs = oracle::gnp_ensemble(25, 3, 7, {0.4, 0.6}, 77);
  for (const auto& g : graphs) {
    if (g.edge_count() > 9) continue;
    const auto a = exact_rc(g, {}, Execution::serial);
    const auto b = exact_rc(g, {}, Execution::parallel);
    CHECK(a.value == b.value);
    REQUIRE(a.value);
    CHECK(*a.value >= rc_lower_bound(g));
    CHECK(*a.value <= g.vertex_count() - 1);
    CHECK((*a.value == 1) == (2 * g.edge_count() == g.vertex_count() * (g.vertex_count() - 1)));
  }
}

TEST_CASE("canonical enumeration visits each partition once") {
  // Bell(5) = 52 partitions of five edges; the path P6 needs all five
  // colors, so every partition with fewer blocks is examined and rejected.
  const auto r = exact_rc(fam("path", {{"n", 6}}), {}, Execution::serial);
  CHECK(r.value == std::size_t{5});
  // Exactly-k enumeration starts at the diameter, which already equals 5.
  CHECK(r.colorings_checked == 1);

  // Star K1,4: diameter 2; partitions into 2 and 3 blocks fail, the single
  // 4-block partition succeeds: S(4,2) + S(4,3) + 1 = 7 + 6 + 1.
  const auto s = exact_rc(fam("star", {{"n", 4}}), {}, Execution::serial);
  CHECK(s.value == std::size_t{4});
  CHECK(s.colorings_checked == 14);
}

TEST_CASE("rc_lower_bound examples") {
  CHECK(rc_lower_bound(line_graph(fam("example31", {{"t", 2}})).l_graph) == 4);
  CHECK(rc_lower_bound(line_graph(fam("example32", {{"k", 2}})).l_graph) == 3);
  CHECK(rc_lower_bound(fam("complete", {{"n", 6}})) == 1);
  CHECK_THROWS_AS(rc_lower_bound(oracle::make(4, {{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("check_iterated_equality examples") {
  const auto p7 = check_iterated_equality(fam("path", {{"n", 7}}));
  CHECK(p7.verdict == EqualityVerdict::equality);
  CHECK(p7.path_predicate);
  CHECK(p7.exact == std::size_t{4});
  CHECK(p7.construction_colors == 4);

  const auto c4 = check_iterated_equality(fam("cycle", {{"n", 4}}));
  CHECK(c4.verdict == EqualityVerdict::strict);
  CHECK(c4.exact == std::size_t{2});
  CHECK(c4.construction_colors == 4);

  const auto spider = check_iterated_equality(fam("spider", {{"legs", 3}, {"length", 2}}));
  CHECK(spider.verdict == EqualityVerdict::strict);
  CHECK_FALSE(spider.path_predicate);

  const auto undecided = check_iterated_equality(fam("petersen"), {12, std::chrono::milliseconds{100}});
  CHECK(undecided.verdict == EqualityVerdict::undecided);
}
