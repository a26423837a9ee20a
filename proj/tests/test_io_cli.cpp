#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "oracles.hpp"
#include "rainbow/commands.hpp"
#include "rainbow/io.hpp"
#include "rainbow/line_graph.hpp"

using namespace rainbow;

namespace {

Graph fam(const char* name, FamilyParams params = {}) { return gen_family(name, params); }

std::size_t parse_error_line(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("no parse error");
  return 0;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(RAINBOW_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "rainbow_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

InstanceSpec family_spec(const char* name, FamilyParams params, const char* theorem = "32") {
  InstanceSpec s;
  s.family = name;
  s.params = std::move(params);
  s.theorem = theorem;
  return s;
}

}  // namespace

TEST_CASE("parse_edge_list examples") {
  const Graph k3 = parse_edge_list("3 3\n0 1\n0 2\n1 2\n");
  CHECK(k3 == fam("complete", {{"n", 3}}));

  const Graph p4 = parse_edge_list("# a path\n4 3\n\n0 1\n1 2\n2 3");
  CHECK(p4 == fam("path", {{"n", 4}}));

  CHECK(parse_error_line("2 1\n0 0\n") == 2);
  CHECK(parse_error_line("# header\n3 2\n0 1\n1 7\n") == 4);
  CHECK(parse_error_line("3 3\n0 1\n1 2\n") > 0);
  CHECK(parse_error_line("3 1\n0 x\n") == 2);
  CHECK(parse_error_line("3 1\n0 1 2\n") == 2);
}

TEST_CASE("edge list and coloring round trips") {
  for (const auto& name : family_names()) {
    FamilyParams params{{"t", 3}, {"k", 3}, {"n", 5}, {"r", 4}, {"f", 2}, {"a", 2}, {"b", 3}, {"legs", 3}, {"length", 2}};
    const Graph g = gen_family(name, params);
    CHECK(parse_edge_list(render_edge_list(g)) == g);
  }
  for (const auto& g : oracle::gnp_ensemble(30, 1, 12, {0.3, 0.6}, 8)) {
    CHECK(parse_edge_list(render_edge_list(g)) == g);
  }
  const auto col = EdgeColoring::from_colors({3, 1, 2, 2});
  CHECK(parse_coloring(render_coloring(col)).color_of == col.color_of);
  CHECK_THROWS_AS(parse_coloring("1\n0\n"), InputError);
}

TEST_CASE("DOT export") {
  const Graph g = fam("path", {{"n", 3}});
  const auto col = EdgeColoring::from_colors({1, 2});
  const auto dot = to_dot(g, &col, "P");
  CHECK(dot.find("graph P {") != std::string::npos);
  CHECK(dot.find("0 -- 1 [colorid=1") != std::string::npos);
  CHECK(dot.find("1 -- 2 [colorid=2") != std::string::npos);
  CHECK(dot.find(std::string(palette_color(2))) != std::string::npos);
  CHECK(palette_color(1) == palette_color(21));
}

TEST_CASE("family generators") {
  const Graph e31 = fam("example31", {{"t", 2}});
  CHECK(e31.vertex_count() == 6);
  CHECK(e31.edge_count() == 7);
  CHECK(diameter(line_graph(e31).l_graph) == std::size_t{4});
  CHECK(diameter(line_graph(fam("example32", {{"k", 2}})).l_graph) == std::size_t{3});
  CHECK(pack_edge_disjoint(fam("triangle_ring", {{"r", 3}}), PackingMode::exact).op == 1);
  CHECK(fam("petersen").edge_count() == 15);
  CHECK_THROWS_AS(fam("example32", {{"k", 1}}), InputError);
  CHECK_THROWS_AS(fam("nonsense"), InputError);
  CHECK_THROWS_AS(fam("path"), InputError);

  Rng a(5), b(5);
  CHECK(random_gnp(9, 0.3, a) == random_gnp(9, 0.3, b));
  const Graph cubic = random_cubic(10, a);
  for (Vertex v = 0; v < cubic.vertex_count(); ++v) CHECK(cubic.degree(v) == 3);
  CHECK(is_connected(cubic));
}

TEST_CASE("instance loading") {
  InstanceSpec none;
  CHECK_THROWS_AS(load_instance(none), InputError);

  InstanceSpec two = family_spec("path", {{"n", 4}});
  two.model = "gnp";
  CHECK_THROWS_AS(load_instance(two), InputError);

  InstanceSpec unseeded;
  unseeded.model = "gnp";
  unseeded.n = 6;
  unseeded.p = 0.5;
  CHECK_THROWS_AS(load_instance(unseeded), InputError);
  unseeded.seed = 4;
  CHECK(load_instance(unseeded).vertex_count() == 6);
}

TEST_CASE("cmd_color reports") {
  const auto r = cmd_color(family_spec("example31", {{"t", 3}}, "31"));
  CHECK(r.exit_code == kExitOk);
  CHECK(r.report["schema"] == 1);
  CHECK(r.report["colors_used"] == 6);
  CHECK(r.report["verified"] == true);

  const auto again = cmd_color(family_spec("example31", {{"t", 3}}, "31"));
  CHECK(r.report.dump() == again.report.dump());

  const auto pet = cmd_color(family_spec("petersen", {}, "cubic"));
  CHECK(pet.report["verified"] == true);
  CHECK(pet.report["colors_used"].get<std::size_t>() <= 11);

  const auto path = scratch("c6.txt");
  write_file(path.string(), render_edge_list(fam("cycle", {{"n", 6}})));
  InstanceSpec file;
  file.file = path.string();
  file.theorem = "32";
  const auto tf = cmd_color(file);
  CHECK(tf.report["packing"]["t"] == 0);
  CHECK(tf.report["colors_used"] == 6);

  CHECK_THROWS_AS(cmd_color(family_spec("path", {{"n", 4}}, "41")), InputError);
}

TEST_CASE("cmd_bench tables") {
  BenchSpec spec;
  spec.n = 8;
  spec.p = 0.4;
  spec.count = 50;
  spec.seed = 1;
  const auto table = cmd_bench(spec);
  CHECK(table.rows.size() == 50);
  CHECK(table.all_verified);
  CHECK(cmd_bench(spec).csv == table.csv);

  BenchSpec cubic;
  cubic.model = "random_cubic";
  cubic.n = 8;
  cubic.count = 20;
  const auto ct = cmd_bench(cubic);
  CHECK(ct.all_verified);
  for (const auto& row : ct.rows) {
    CHECK(row["bound_cubic"] == 9);
    CHECK(row["m"] == 12);
  }

  BenchSpec empty;
  empty.count = 0;
  const auto et = cmd_bench(empty);
  CHECK(et.rows.empty());
  CHECK(std::count(et.csv.begin(), et.csv.end(), '\n') == 1);
}

TEST_CASE("command line interface") {
  const auto color = run_cli("color --family example31 --t 3 --theorem 31");
  CHECK(color.code == 0);
  CHECK(color.out.find("colors_used = 6") != std::string::npos);

  const auto json_path = scratch("r.json");
  const auto dot_path = scratch("r.dot");
  CHECK(run_cli("color --family triangle_ring --r 3 --json " + json_path.string() + " --dot " + dot_path.string())
            .code == 0);
  const auto report = nlohmann::json::parse(read_file(json_path.string()));
  CHECK(report["schema"] == 1);
  CHECK(report["verified"] == true);
  CHECK(read_file(dot_path.string()).find("colorid=") != std::string::npos);

  const auto lg = run_cli("linegraph --family star --n 3");
  CHECK(lg.code == 0);
  CHECK(parse_edge_list(lg.out).edge_count() == 3);

  const auto gen = run_cli("gen --family petersen");
  CHECK(parse_edge_list(gen.out) == fam("petersen"));

  CHECK(run_cli("exact --family cycle --n 5").out.find("rc = 3") != std::string::npos);
  CHECK(run_cli("bound --family example32 --k 3").code == 0);

  // verify: a good and a bad coloring of P3.
  const auto g_path = scratch("p3.txt");
  const auto good = scratch("good.txt");
  const auto bad = scratch("bad.txt");
  write_file(g_path.string(), "3 2\n0 1\n1 2\n");
  write_file(good.string(), "1\n2\n");
  write_file(bad.string(), "1\n1\n");
  CHECK(run_cli("verify --file " + g_path.string() + " --coloring " + good.string()).code == kExitOk);
  CHECK(run_cli("verify --file " + g_path.string() + " --coloring " + bad.string()).code == kExitUnverified);

  const auto broken = scratch("broken.txt");
  write_file(broken.string(), "2 1\n0 0\n");
  CHECK(run_cli("color --file " + broken.string()).code == kExitInput);
  CHECK(run_cli("color --family nonsense").code == kExitInput);
  CHECK(run_cli("color --bogus-flag").code == kExitInput);
  CHECK(run_cli("color --family complete --n 7 --pack exact").code == kExitResource);
  CHECK(run_cli("color --family complete --n 7").code == kExitOk);
  CHECK(run_cli("exact --family petersen").code == kExitResource);
  CHECK(run_cli("exact --family cycle --n 14 --max-edges 20 --budget-ms 100").code == kExitResource);

  const auto bench = run_cli("bench --count 3 --seed 9");
  CHECK(bench.code == 0);
  CHECK(std::count(bench.out.begin(), bench.out.end(), '\n') == 4);
}
