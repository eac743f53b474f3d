#pragma once

#include <string>
#include <string_view>

#include "sepindex/complex.hpp"

namespace sepindex {

/// "facets v1": a header line `n m`, then m facets as ascending labels, one per
/// line, sorted lexicographically. Lines starting with '#' are comments.
std::string write_facets(const Complex& x);
Complex read_facets(std::string_view text, bool strict = true);

/// Raw edge list: one `u v` pair per line, '#' comments; n = largest label + 1.
Graph read_edge_list(std::string_view text);

enum class InputFormat { Auto, Facets, Edges };

/// 1-skeleton of a facets file, or the graph of an edge list. Auto tries the
/// facets format first.
Graph read_graph(std::string_view text, InputFormat format = InputFormat::Auto, bool strict = true);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace sepindex
