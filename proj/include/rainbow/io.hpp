#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rainbow/edge_coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

class ParseError : public InputError {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// Edge-list text: '#' comment lines and blank lines are ignored; the first
/// data line is "n m", followed by m lines "u v" with 0-based vertex ids.
Graph parse_edge_list(std::string_view text);

std::string render_edge_list(const Graph& g);

/// One positive color id per data line, in edge-id order.
EdgeColoring parse_coloring(std::string_view text);

std::string render_coloring(const EdgeColoring& col);

/// Graphviz export. With a coloring, each edge carries colorid=<id>, a
/// label and a stroke color from palette_color(id).
std::string to_dot(const Graph& g, const EdgeColoring* coloring = nullptr, std::string_view name = "G");

/// Fixed 20-entry palette; ids past the end wrap around.
std::string_view palette_color(Color id);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace rainbow
