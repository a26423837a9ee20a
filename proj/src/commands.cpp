#include "rainbow/commands.hpp"

#include <sstream>

#include "rainbow/coloring.hpp"
#include "rainbow/io.hpp"
#include "rainbow/line_graph.hpp"

namespace rainbow {

using nlohmann::json;

namespace {

struct ChosenPacking {
  TrianglePacking packing;
  PackingMode mode;
  bool fell_back = false;
};

PackingMode greedy_counterpart(PackingMode mode) {
  if (mode == PackingMode::exact) return PackingMode::greedy;
  if (mode == PackingMode::forest_exact) return PackingMode::forest_greedy;
  return mode;
}

// Defaulted exact modes fall back to greedy past the triangle cap; an
// explicitly requested mode surfaces the resource error instead.
ChosenPacking choose_packing(const Graph& g, PackingMode mode, bool allow_fallback) {
  try {
    return {pack_edge_disjoint(g, mode), mode, false};
  } catch (const ResourceLimitError&) {
    if (!allow_fallback) throw;
    const auto fallback = greedy_counterpart(mode);
    return {pack_edge_disjoint(g, fallback), fallback, true};
  }
}

json graph_summary(const Graph& g) {
  const auto profile = degree_profile(g);
  return {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"n1", profile.n1}, {"n2", profile.n2}};
}

json optional_size(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

json packing_summary(const TrianglePacking& p, std::optional<PackingMode> mode, bool fell_back) {
  json tris = json::array();
  for (const auto& t : p.triangles) tris.push_back({t.vertices[0], t.vertices[1], t.vertices[2]});
  json out{{"t", p.t},           {"c", p.c},       {"n2_prime", p.n2_prime},
           {"op", p.op},         {"forest", p.all_forest()}, {"triangles", tris}};
  if (mode) {
    out["mode"] = std::string(to_string(*mode));
    out["fallback_to_greedy"] = fell_back;
  }
  return out;
}

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return g.vertex_count() > 0;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Graph load_instance(const InstanceSpec& spec) {
  const int sources = int(spec.file.has_value()) + int(spec.family.has_value()) + int(spec.model.has_value());
  if (sources != 1) throw InputError("exactly one of --file, --family, --model is required");
  if (spec.file) return parse_edge_list(read_file(*spec.file));
  if (spec.family) return gen_family(*spec.family, spec.params);
  if (!spec.seed) throw InputError("random models require --seed");
  Rng rng(*spec.seed);
  if (*spec.model == "gnp") return random_gnp(spec.n, spec.p, rng);
  if (*spec.model == "random_cubic") return random_cubic(spec.n, rng);
  throw InputError("unknown model '" + *spec.model + "'");
}

json describe_source(const InstanceSpec& spec) {
  if (spec.file) return {{"file", *spec.file}};
  if (spec.family) return {{"family", *spec.family}, {"params", spec.params}};
  json out{{"model", spec.model.value_or("")}, {"n", spec.n}};
  if (spec.model == std::optional<std::string>("gnp")) out["p"] = spec.p;
  if (spec.seed) out["seed"] = *spec.seed;
  return out;
}

CommandResult cmd_color(const InstanceSpec& spec) {
  const Graph g = load_instance(spec);
  CommandResult res;
  json report{{"schema", kReportSchema}, {"command", "color"}, {"theorem", spec.theorem},
              {"source", describe_source(spec)}, {"graph", graph_summary(g)}};

  Construction c;
  std::string target_name = "L(G)";
  if (spec.theorem == "31" || spec.theorem == "32") {
    const bool forest = spec.theorem == "31";
    const auto mode = spec.pack.value_or(forest ? PackingMode::forest_exact : PackingMode::exact);
    auto chosen = choose_packing(g, mode, !spec.pack);
    c = forest ? color_thm31(g, chosen.packing) : color_thm32(g, chosen.packing);
    report["packing"] = packing_summary(c.packing, chosen.mode, chosen.fell_back);
  } else if (spec.theorem == "cubic") {
    c = color_iterated_cubic(g);
    target_name = "L2(G)";
    report["packing"] = packing_summary(c.packing, std::nullopt, false);
  } else if (spec.theorem == "iterated") {
    c = color_iterated(g);
    target_name = "L2(G)";
  } else {
    throw InputError("unknown theorem '" + spec.theorem + "' (expected 31, 32, cubic or iterated)");
  }

  json bounds = json::object();
  for (const auto& b : c.bounds) bounds[b.name] = b.value;
  json failing = nullptr;
  if (c.certificate.witness_failure) {
    failing = {c.certificate.witness_failure->first, c.certificate.witness_failure->second};
  }
  report["transform"] = {{"op1_steps", c.op1_steps}, {"op2_steps", c.op2_steps}};
  report["target"] = {{"name", target_name},
                      {"vertices", c.target.vertex_count()},
                      {"edges", c.target.edge_count()},
                      {"diameter", optional_size(diameter(c.target))}};
  report["bounds"] = bounds;
  report["bound"] = {{"name", c.certificate.bound_name}, {"value", c.certificate.bound_value}};
  report["colors_used"] = c.certificate.colors_used;
  report["verified"] = c.certificate.verified;
  report["failing_pair"] = failing;
  report["coloring"] = c.coloring.color_of;

  std::ostringstream text;
  text << "target " << target_name << ": " << c.target.vertex_count() << " vertices, " << c.target.edge_count()
       << " edges\n";
  text << "bound " << c.certificate.bound_name << " = " << c.certificate.bound_value << '\n';
  text << "colors_used = " << c.certificate.colors_used << '\n';
  text << "verified = " << yes_no(c.certificate.verified) << '\n';

  res.report = std::move(report);
  res.text = text.str();
  res.dot = to_dot(c.target, &c.coloring, target_name == "L(G)" ? "LG" : "L2G");
  res.exit_code = c.certificate.verified ? kExitOk : kExitUnverified;
  return res;
}

CommandResult cmd_bound(const InstanceSpec& spec) {
  const Graph g = load_instance(spec);
  if (!is_connected(g)) throw InputError("graph must be connected");
  const auto profile = degree_profile(g);
  const auto lg = line_graph(g);

  json report{{"schema", kReportSchema}, {"command", "bound"}, {"source", describe_source(spec)},
              {"graph", graph_summary(g)}};
  json bounds = json::object();
  std::ostringstream text;

  auto forest = choose_packing(g, spec.pack.value_or(PackingMode::forest_exact), !spec.pack);
  auto general = choose_packing(g, PackingMode::exact, true);
  if (forest.packing.all_forest()) {
    bounds["n2-t"] = profile.n2 - forest.packing.t;
  }
  const auto& p = general.packing;
  bounds["t+n2'+c"] = p.t + p.n2_prime + p.c;
  bounds["n2+op-t"] = p.n2 + p.op - p.t;
  if (is_cubic(g)) bounds["n+1"] = g.vertex_count() + 1;
  if (lg.l_graph.edge_count() >= 2) bounds["m-m1"] = g.edge_count() - pendent_two_paths(g);
  report["packing_forest"] = packing_summary(forest.packing, forest.mode, forest.fell_back);
  report["packing_general"] = packing_summary(p, general.mode, general.fell_back);
  report["bounds"] = bounds;
  const auto diam_l = lg.l_graph.vertex_count() > 0 ? diameter(lg.l_graph) : std::nullopt;
  report["lower_bound_diam_L"] = optional_size(diam_l);

  for (const auto& [name, value] : bounds.items()) text << name << " = " << value.get<std::size_t>() << '\n';
  if (diam_l) text << "diam(L) = " << *diam_l << '\n';

  CommandResult res;
  res.report = std::move(report);
  res.text = text.str();
  return res;
}

CommandResult cmd_exact(const InstanceSpec& spec, std::size_t line_iterations) {
  Graph g = load_instance(spec);
  for (std::size_t i = 0; i < line_iterations; ++i) {
    if (g.edge_count() == 0) throw InputError("cannot take the line graph of an edgeless graph");
    g = line_graph(g).l_graph;
  }
  const auto r = exact_rc(g, spec.limits);
  CommandResult res;
  res.report = {{"schema", kReportSchema},
                {"command", "exact"},
                {"source", describe_source(spec)},
                {"line_iterations", line_iterations},
                {"graph", graph_summary(g)},
                {"diameter", optional_size(diameter(g))},
                {"exact_rc", optional_size(r.value)},
                {"lower", r.lower},
                {"upper", r.upper},
                {"limits_hit", r.limits_hit},
                {"colorings_checked", r.colorings_checked}};
  std::ostringstream text;
  if (r.value) {
    text << "rc = " << *r.value << '\n';
  } else {
    text << "limits hit; rc in [" << r.lower << ", " << r.upper << "]\n";
  }
  res.text = text.str();
  res.exit_code = r.limits_hit ? kExitResource : kExitOk;
  return res;
}

CommandResult cmd_verify(const InstanceSpec& spec, const std::string& coloring_path) {
  const Graph g = load_instance(spec);
  const auto col = parse_coloring(read_file(coloring_path));
  const auto check = is_rainbow_connected(g, col);
  CommandResult res;
  json failing = nullptr;
  if (check.failing_pair) failing = {check.failing_pair->first, check.failing_pair->second};
  res.report = {{"schema", kReportSchema}, {"command", "verify"},         {"source", describe_source(spec)},
                {"graph", graph_summary(g)}, {"colors_used", col.colors_used()}, {"rainbow_connected", check.connected},
                {"failing_pair", failing}};
  std::ostringstream text;
  text << "rainbow_connected = " << yes_no(check.connected) << '\n';
  if (check.failing_pair) text << "no rainbow path between " << check.failing_pair->first << " and " << check.failing_pair->second << '\n';
  res.text = text.str();
  res.exit_code = check.connected ? kExitOk : kExitUnverified;
  return res;
}

namespace {

std::vector<std::string> bench_columns(const std::string& model) {
  std::vector<std::string> cols{"index",         "n",           "m",
                                "n2",            "t_greedy",    "t_exact",
                                "t_forest_greedy", "t_forest_exact", "c",
                                "n2_prime",      "op",          "bound_thm31",
                                "colors_thm31",  "bound_thm32", "bound_op",
                                "colors_thm32",  "diam_L",      "exact_rc_L"};
  if (model == "random_cubic") {
    for (const char* extra : {"bound_cubic", "colors_cubic", "bound_iterated", "colors_iterated"}) cols.push_back(extra);
  }
  cols.push_back("verified");
  return cols;
}

json bench_row(std::size_t index, const Graph& g, const BenchSpec& spec) {
  json row{{"index", index}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
  const auto profile = degree_profile(g);
  row["n2"] = profile.n2;
  for (const auto mode : {PackingMode::greedy, PackingMode::exact, PackingMode::forest_greedy, PackingMode::forest_exact}) {
    try {
      row["t_" + std::string(to_string(mode))] = pack_edge_disjoint(g, mode).t;
    } catch (const ResourceLimitError&) {
      row["t_" + std::string(to_string(mode))] = nullptr;
    }
  }
  bool verified = true;
  const bool line_nontrivial = g.edge_count() >= 2;
  if (line_nontrivial) {
    const auto forest = choose_packing(g, PackingMode::forest_exact, true);
    const auto c31 = color_thm31(g, forest.packing);
    row["bound_thm31"] = c31.certificate.bound_value;
    row["colors_thm31"] = c31.certificate.colors_used;
    verified = verified && c31.certificate.verified;

    const auto general = choose_packing(g, PackingMode::exact, true);
    const auto c32 = color_thm32(g, general.packing);
    row["c"] = c32.packing.c;
    row["n2_prime"] = c32.packing.n2_prime;
    row["op"] = c32.packing.op;
    row["bound_thm32"] = c32.bounds[0].value;
    row["bound_op"] = c32.bounds[1].value;
    row["colors_thm32"] = c32.certificate.colors_used;
    verified = verified && c32.certificate.verified;

    row["diam_L"] = optional_size(diameter(c32.target));
    const auto exact = exact_rc(c32.target, spec.limits);
    row["exact_rc_L"] = optional_size(exact.value);
    if (exact.value && *exact.value > std::min(c31.certificate.colors_used, c32.certificate.colors_used)) {
      verified = false;
    }
  }
  if (spec.model == "random_cubic") {
    const auto cubic = color_iterated_cubic(g);
    row["bound_cubic"] = cubic.certificate.bound_value;
    row["colors_cubic"] = cubic.certificate.colors_used;
    const auto iter = color_iterated(g);
    row["bound_iterated"] = iter.certificate.bound_value;
    row["colors_iterated"] = iter.certificate.colors_used;
    verified = verified && cubic.certificate.verified && iter.certificate.verified;
  }
  row["verified"] = verified;
  return row;
}

std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

}  // namespace

BenchTable cmd_bench(const BenchSpec& spec) {
  if (spec.model != "gnp" && spec.model != "random_cubic") throw InputError("unknown model '" + spec.model + "'");
  Rng rng(spec.seed);
  std::vector<Graph> graphs;
  graphs.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    graphs.push_back(spec.model == "gnp" ? random_gnp(spec.n, spec.p, rng) : random_cubic(spec.n, rng));
  }

  std::vector<json> rows(graphs.size());
  std::vector<std::string> errors(graphs.size());
  const auto count = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      rows[i] = bench_row(static_cast<std::size_t>(i), graphs[i], spec);
    } catch (const std::exception& ex) {
      errors[i] = ex.what();
    }
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (!errors[i].empty()) throw InvariantViolation("bench instance " + std::to_string(i) + ": " + errors[i]);
  }

  BenchTable table;
  const auto columns = bench_columns(spec.model);
  std::ostringstream csv;
  for (std::size_t c = 0; c < columns.size(); ++c) csv << (c ? "," : "") << columns[c];
  csv << '\n';
  for (auto& row : rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      csv << (c ? "," : "") << (row.contains(columns[c]) ? csv_cell(row[columns[c]]) : "");
    }
    csv << '\n';
    table.all_verified = table.all_verified && row["verified"].get<bool>();
    table.rows.push_back(std::move(row));
  }
  table.csv = csv.str();
  return table;
}

}  // namespace rainbow
