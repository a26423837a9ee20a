#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rainbow/commands.hpp"
#include "rainbow/io.hpp"
#include "rainbow/line_graph.hpp"

namespace {

using namespace rainbow;

struct InstanceFlags {
  std::optional<std::string> file;
  std::optional<std::string> family;
  std::optional<std::string> model;
  std::optional<std::size_t> t, k, n, r, f, a, b, legs, length;
  double p = 0.3;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> pack;
  std::string theorem = "32";
  std::size_t max_edges = 12;
  std::size_t budget_ms = 60'000;
  std::optional<std::string> dot;
  std::optional<std::string> json;

  void add_source(CLI::App* cmd) {
    cmd->add_option("--file", file, "edge-list file");
    cmd->add_option("--family", family, "named family (example31, example32, path, cycle, ...)");
    cmd->add_option("--model", model, "random model: gnp | random_cubic");
    cmd->add_option("--t", t, "example31: number of triangles");
    cmd->add_option("--k", k, "example32: path parameter");
    cmd->add_option("--n", n, "vertex count for path/cycle/complete/star and random models");
    cmd->add_option("--r", r, "triangle_ring size");
    cmd->add_option("--f", f, "friendship size");
    cmd->add_option("--a", a, "complete_bipartite left side");
    cmd->add_option("--b", b, "complete_bipartite right side");
    cmd->add_option("--legs", legs, "spider legs");
    cmd->add_option("--length", length, "spider leg length");
    cmd->add_option("--p", p, "gnp edge probability");
    cmd->add_option("--seed", seed, "seed for random models");
  }

  void add_outputs(CLI::App* cmd) {
    cmd->add_option("--json", json, "write the JSON report here");
    cmd->add_option("--dot", dot, "write a Graphviz rendering here");
  }

  void add_limits(CLI::App* cmd) {
    cmd->add_option("--max-edges", max_edges, "edge cap for the exact oracle")->capture_default_str();
    cmd->add_option("--budget-ms", budget_ms, "time budget for the exact oracle")->capture_default_str();
  }

  InstanceSpec spec() const {
    InstanceSpec s;
    s.file = file;
    s.family = family;
    s.model = model;
    s.seed = seed;
    s.p = p;
    s.n = n.value_or(0);
    const std::pair<const char*, const std::optional<std::size_t>*> params[] = {
        {"t", &t}, {"k", &k}, {"n", &n}, {"r", &r}, {"f", &f}, {"a", &a}, {"b", &b}, {"legs", &legs}, {"length", &length}};
    for (const auto& [key, value] : params) {
      if (*value) s.params[key] = **value;
    }
    if (pack) s.pack = parse_packing_mode(*pack);
    s.theorem = theorem;
    s.limits.max_edges = max_edges;
    s.limits.budget = std::chrono::milliseconds(budget_ms);
    return s;
  }
};

int emit(const CommandResult& res, const InstanceFlags& flags) {
  std::cout << res.text;
  if (flags.json) write_file(*flags.json, res.report.dump(2) + "\n");
  if (flags.dot && res.dot) write_file(*flags.dot, *res.dot);
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow colorings of line graphs and iterated line graphs"};
  app.require_subcommand(1);

  InstanceFlags flags;
  std::size_t iterations = 1;
  std::size_t line_iterations = 0;
  std::optional<std::string> out_path;
  std::string coloring_path;
  BenchSpec bench;
  std::optional<std::string> csv_path;

  auto* linegraph = app.add_subcommand("linegraph", "print the (iterated) line graph as an edge list");
  flags.add_source(linegraph);
  linegraph->add_option("--iter", iterations, "number of line-graph iterations")->capture_default_str();
  linegraph->add_option("--dot", flags.dot, "write a Graphviz rendering here");

  auto* color = app.add_subcommand("color", "build and verify a rainbow coloring");
  flags.add_source(color);
  flags.add_outputs(color);
  color->add_option("--theorem", flags.theorem, "31 | 32 | cubic | iterated")->capture_default_str();
  color->add_option("--pack", flags.pack, "greedy | exact | forest_greedy | forest_exact");

  auto* verify = app.add_subcommand("verify", "check a coloring file for rainbow connectivity");
  flags.add_source(verify);
  verify->add_option("--coloring", coloring_path, "one color id per line, in edge order")->required();
  verify->add_option("--json", flags.json, "write the JSON report here");

  auto* exact = app.add_subcommand("exact", "exact rainbow connection number by exhaustive search");
  flags.add_source(exact);
  flags.add_limits(exact);
  exact->add_option("--line", line_iterations, "apply the line graph this many times first")->capture_default_str();
  exact->add_option("--json", flags.json, "write the JSON report here");

  auto* bound = app.add_subcommand("bound", "evaluate every upper bound and the diameter lower bound");
  flags.add_source(bound);
  bound->add_option("--pack", flags.pack, "packing mode for the forest bound");
  bound->add_option("--json", flags.json, "write the JSON report here");

  auto* gen = app.add_subcommand("gen", "print a generated graph as an edge list");
  flags.add_source(gen);
  gen->add_option("--out", out_path, "write here instead of stdout");

  auto* bench_cmd = app.add_subcommand("bench", "run the constructions over a seeded random ensemble");
  bench_cmd->add_option("--model", bench.model, "gnp | random_cubic")->capture_default_str();
  bench_cmd->add_option("--n", bench.n, "vertices per instance")->capture_default_str();
  bench_cmd->add_option("--p", bench.p, "gnp edge probability")->capture_default_str();
  bench_cmd->add_option("--count", bench.count, "number of instances")->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "ensemble seed")->capture_default_str();
  bench_cmd->add_option("--max-edges", bench.limits.max_edges, "edge cap for the exact oracle")->capture_default_str();
  bench_cmd->add_option("--json", flags.json, "write the rows as JSON here");
  bench_cmd->add_option("--csv", csv_path, "write the CSV table here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*linegraph) {
      Graph g = load_instance(flags.spec());
      if (iterations == 0) throw InputError("--iter must be at least 1");
      const auto chain = iterated_line_graph(g, iterations);
      std::cout << render_edge_list(chain.back().l_graph);
      if (flags.dot) write_file(*flags.dot, to_dot(chain.back().l_graph));
      return kExitOk;
    }
    if (*color) return emit(cmd_color(flags.spec()), flags);
    if (*verify) return emit(cmd_verify(flags.spec(), coloring_path), flags);
    if (*exact) return emit(cmd_exact(flags.spec(), line_iterations), flags);
    if (*bound) return emit(cmd_bound(flags.spec()), flags);
    if (*gen) {
      const auto text = render_edge_list(load_instance(flags.spec()));
      if (out_path) {
        write_file(*out_path, text);
      } else {
        std::cout << text;
      }
      return kExitOk;
    }
    if (*bench_cmd) {
      const auto table = cmd_bench(bench);
      if (csv_path) {
        write_file(*csv_path, table.csv);
      } else {
        std::cout << table.csv;
      }
      if (flags.json) {
        nlohmann::json report{{"schema", kReportSchema},
                              {"command", "bench"},
                              {"model", bench.model},
                              {"n", bench.n},
                              {"count", bench.count},
                              {"seed", bench.seed},
                              {"rows", table.rows}};
        if (bench.model == "gnp") report["p"] = bench.p;
        write_file(*flags.json, report.dump(2) + "\n");
      }
      return table.all_verified ? kExitOk : kExitUnverified;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
