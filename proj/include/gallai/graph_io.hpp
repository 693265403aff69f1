#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// graph6 (McKay): one printable-ASCII line per graph, every 6-bit group stored
// as the byte value + 63. The header encodes n; the payload lists the upper
// triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
// An optional ">>graph6<<" prefix is accepted on input.

/// Throws FormatError on a malformed header, a truncated or overlong payload,
/// or a byte outside 63..126.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

// Edge-list text: "n m", then m lines "u v". Several graphs may follow one
// another in a single stream. Blank lines and lines starting with '#' are
// ignored.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

enum class InputFormat { automatic, graph6, edge_list };

/// One record from a batch stream: a graph, or the reason it was rejected.
struct GraphRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::variant<Graph, std::string> content;

  bool ok() const { return std::holds_alternative<Graph>(content); }
  const Graph& graph() const { return std::get<Graph>(content); }
  const std::string& error() const { return std::get<std::string>(content); }
};

/// Reads every record. Malformed records are returned as errors and reading
/// continues. In automatic mode a stream whose first data line holds two
/// integers is treated as an edge list, anything else as graph6.
std::vector<GraphRecord> read_graphs(std::istream& in, InputFormat format = InputFormat::automatic);

}  // namespace gallai
