#include "rainbow/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rainbow {

ParseError::ParseError(std::size_t line, const std::string& what)
    : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct DataLine {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<DataLine> data_lines(std::string_view text) {
  std::vector<DataLine> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    DataLine dl{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) dl.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (dl.fields.empty() || dl.fields.front().front() == '#') continue;
    out.push_back(std::move(dl));
  }
  return out;
}

std::size_t to_number(std::string_view field, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header line \"n m\"");
  const auto& header = lines.front();
  if (header.fields.size() != 2) throw ParseError(header.number, "header must be \"n m\"");
  const std::size_t n = to_number(header.fields[0], header.number);
  const std::size_t m = to_number(header.fields[1], header.number);
  if (lines.size() - 1 != m) {
    const std::size_t at = lines.size() > m + 1 ? lines[m + 1].number : lines.back().number;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.fields.size() != 2) throw ParseError(l.number, "edge line must be \"u v\"");
    edges.push_back({to_number(l.fields[0], l.number), to_number(l.fields[1], l.number)});
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const GraphError& err) {
    throw ParseError(lines[err.index() + 1].number, to_string(err.kind()));
  }
}

std::string render_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

EdgeColoring parse_coloring(std::string_view text) {
  std::vector<Color> colors;
  for (const auto& l : data_lines(text)) {
    if (l.fields.size() != 1) throw ParseError(l.number, "expected one color id");
    const std::size_t c = to_number(l.fields[0], l.number);
    if (c == 0) throw ParseError(l.number, "color ids start at 1");
    colors.push_back(static_cast<Color>(c));
  }
  return EdgeColoring::from_colors(std::move(colors));
}

std::string render_coloring(const EdgeColoring& col) {
  std::ostringstream out;
  for (const Color c : col.color_of) out << c << '\n';
  return out.str();
}

std::string_view palette_color(Color id) {
  static constexpr std::array<std::string_view, 20> kPalette{
      "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
      "#bcf60c", "#fabebe", "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000",
      "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080", "#000000"};
  return kPalette[(id == 0 ? 0 : id - 1) % kPalette.size()];
}

std::string to_dot(const Graph& g, const EdgeColoring* coloring, std::string_view name) {
  if (coloring && coloring->size() != g.edge_count()) throw InputError("to_dot: coloring size mismatch");
  std::ostringstream out;
  out << "graph " << name << " {\n";
  if (coloring) {
    out << "  // palette:";
    for (Color c = 1; c <= coloring->k; ++c) out << ' ' << c << '=' << palette_color(c);
    out << '\n';
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (coloring) {
      const Color c = coloring->color_of[e];
      out << " [colorid=" << c << ", label=\"" << c << "\", color=\"" << palette_color(c) << "\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace rainbow
