#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "edgemin/graph.hpp"

namespace edgemin {

/// Malformed textual input (graph6, JSON, LP solution files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decode one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; padding bits must be zero.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// {"n": int, "edges": [[i, j], ...]} with i < j in lexicographic order.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

/// {"n": int, "weights": [[...], ...]}: a full n x n symmetric matrix.
std::string weights_to_json(const WeightMatrix& w);
WeightMatrix weights_from_json(std::string_view text);

/// Graph from text in either format; JSON is recognised by a leading '{'.
Graph parse_graph_auto(std::string_view text);

std::string read_text_file(const std::string& path);

}  // namespace edgemin
