#include "sepindex/facets_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "sepindex/error.hpp"

namespace sepindex {

namespace {

struct Line {
  int number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_error(int line, std::size_t column, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ", column " + std::to_string(column + 1) + ": " + what);
}

std::vector<int> parse_ints(const Line& line) {
  std::vector<int> values;
  std::size_t i = 0;
  const auto& t = line.text;
  while (i < t.size()) {
    if (t[i] == ' ' || t[i] == '\t') {
      ++i;
      continue;
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data() + i, t.data() + t.size(), value);
    if (ec != std::errc{} || (ptr != t.data() + t.size() && *ptr != ' ' && *ptr != '\t')) {
      parse_error(line.number, i, "expected an integer");
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - t.data());
  }
  return values;
}

}  // namespace

std::string write_facets(const Complex& x) {
  std::ostringstream out;
  out << x.num_vertices() << ' ' << x.facets().size() << '\n';
  for (const auto& f : x.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
  return out.str();
}

Complex read_facets(std::string_view text, bool strict) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw InputError("line 1, column 1: missing header 'n m'");
  const auto header = parse_ints(lines[0]);
  if (header.size() != 2) parse_error(lines[0].number, 0, "header must be 'n m'");
  const int n = header[0];
  const int m = header[1];
  if (n <= 0 || m <= 0) parse_error(lines[0].number, 0, "vertex and facet counts must be positive");
  if (static_cast<int>(lines.size()) - 1 != m) {
    parse_error(lines.back().number, 0,
                "header declares " + std::to_string(m) + " facets, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Simplex> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto f = parse_ints(lines[i]);
    if (f.empty()) parse_error(lines[i].number, 0, "empty facet");
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (f[j] < 0 || f[j] >= n) parse_error(lines[i].number, 0, "label " + std::to_string(f[j]) + " out of range");
      if (j && f[j] <= f[j - 1]) parse_error(lines[i].number, 0, "facet labels must be strictly ascending");
    }
    facets.push_back(std::move(f));
  }
  return Complex::from_facets(n, std::move(facets), strict);
}

Graph read_edge_list(std::string_view text) {
  std::vector<std::array<Vertex, 2>> edges;
  int n = 0;
  for (const auto& line : content_lines(text)) {
    const auto v = parse_ints(line);
    if (v.size() != 2) parse_error(line.number, 0, "expected 'u v'");
    if (v[0] < 0 || v[1] < 0) parse_error(line.number, 0, "negative label");
    if (v[0] == v[1]) parse_error(line.number, 0, "self-loop");
    edges.push_back({v[0], v[1]});
    n = std::max({n, v[0] + 1, v[1] + 1});
  }
  if (edges.empty()) throw InputError("line 1, column 1: empty edge list");
  return Graph::from_edges(n, edges);
}

Graph read_graph(std::string_view text, InputFormat format, bool strict) {
  switch (format) {
    case InputFormat::Facets:
      return one_skeleton(read_facets(text, strict));
    case InputFormat::Edges:
      return read_edge_list(text);
    case InputFormat::Auto:
      break;
  }
  try {
    return one_skeleton(read_facets(text, strict));
  } catch (const InputError& facets_error) {
    try {
      return read_edge_list(text);
    } catch (const InputError&) {
      throw facets_error;
    }
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
}

}  // namespace sepindex
