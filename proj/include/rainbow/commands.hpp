#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "rainbow/families.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/triangles.hpp"
#include "rainbow/verifier.hpp"

namespace rainbow {

// Process exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitUnverified = 2, kExitInput = 3, kExitResource = 4 };

inline constexpr int kReportSchema = 1;

/// Where a graph comes from plus the options that drive a pipeline.
/// Exactly one of file / family / model is set; model requires a seed.
struct InstanceSpec {
  std::optional<std::string> file;
  std::optional<std::string> family;
  FamilyParams params;
  std::optional<std::string> model;  // gnp | random_cubic
  std::size_t n = 0;
  double p = 0.0;
  std::optional<std::uint64_t> seed;

  std::optional<PackingMode> pack;
  std::string theorem = "32";
  ExactLimits limits;
};

Graph load_instance(const InstanceSpec& spec);

nlohmann::json describe_source(const InstanceSpec& spec);

struct CommandResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string text;          // human-readable summary for stdout
  std::optional<std::string> dot;
};

/// Construction pipelines: "31", "32", "cubic", "iterated". Packing defaults to
/// forest_exact for 31 and exact for 32, falling back to the greedy mode
/// when the exact search exceeds its cap.
CommandResult cmd_color(const InstanceSpec& spec);

/// Every bound for the instance without constructing colorings.
CommandResult cmd_bound(const InstanceSpec& spec);

/// exact rc of the instance graph (or of its k-th line graph).
CommandResult cmd_exact(const InstanceSpec& spec, std::size_t line_iterations);

/// Checks a coloring file against the instance graph.
CommandResult cmd_verify(const InstanceSpec& spec, const std::string& coloring_path);

struct BenchSpec {
  std::string model = "gnp";  // gnp | random_cubic
  std::size_t n = 8;
  double p = 0.4;
  std::size_t count = 10;
  std::uint64_t seed = 1;
  ExactLimits limits{12, std::chrono::milliseconds{10'000}};
};

struct BenchTable {
  nlohmann::json rows = nlohmann::json::array();
  std::string csv;
  bool all_verified = true;
};

/// Instances are drawn sequentially from the seed and evaluated in
/// parallel; rows always follow instance order.
BenchTable cmd_bench(const BenchSpec& spec);

}  // namespace rainbow
