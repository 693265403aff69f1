#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gallai/graph.hpp"
#include "gallai/path.hpp"

namespace gallai {

/// Subset DP memory grows as 4 * 2^n bytes; beyond this it is refused.
inline constexpr int kMaxDpVertices = 26;

struct EngineOptions {
  /// Graphs with at most this many vertices use the subset DP, larger ones
  /// the branch-and-bound search.
  int dp_threshold = 24;
  /// Hard limit on the number of paths an enumeration may produce.
  std::size_t enumeration_cap = 2'000'000;
};

class EnumerationCapExceeded : public std::runtime_error {
 public:
  explicit EnumerationCapExceeded(std::size_t cap)
      : std::runtime_error("more than " + std::to_string(cap) + " longest paths"), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

// Every routine below throws GraphError on the 0-vertex graph. "Order" is the
// vertex count of a path. Disconnected graphs are fine: the maximum ranges
// over all components.

/// Dispatches on EngineOptions::dp_threshold.
int longest_path_order(const Graph& g, const EngineOptions& options = {});

/// Reachable (visited set, endpoint) states, one endpoint bitmask per subset.
int longest_path_order_dp(const Graph& g);

/// Depth-first search that prunes a branch once the current order plus the
/// vertices still reachable from its endpoint cannot beat the incumbent.
int longest_path_order_bnb(const Graph& g);

/// One longest path, in canonical orientation.
Path find_longest_path(const Graph& g);

/// All longest paths, canonical, deduplicated and sorted. Throws
/// EnumerationCapExceeded past options.enumeration_cap paths.
std::vector<Path> enumerate_longest_paths(const Graph& g, const EngineOptions& options = {});

enum class IntersectionMethod { enumeration, deletion };

struct IntersectionReport {
  int longest_order = 0;
  std::vector<Vertex> intersection;
  IntersectionMethod method = IntersectionMethod::enumeration;
  /// Distinct longest paths up to reversal; only the enumeration method
  /// counts them.
  std::optional<std::size_t> path_count;
};

/// enumeration: intersect the vertex sets of all longest paths.
/// deletion: keep v when removing it lowers the longest order (removing the
/// only vertex of K1 gives order 0).
IntersectionReport intersection_of_longest_paths(const Graph& g, IntersectionMethod method,
                                                 const EngineOptions& options = {});

/// Throws InvalidPath when p is not a path of g.
bool is_longest_path(const Graph& g, const Path& p, const EngineOptions& options = {});

std::string_view to_string(IntersectionMethod method);
std::optional<IntersectionMethod> parse_intersection_method(std::string_view text);

}  // namespace gallai
