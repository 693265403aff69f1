#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

/// Four vertices inducing two disjoint edges ab and cd with no edge between
/// them.
struct TwoK2Witness {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;

  /// Orders each edge (a < b, c < d) and the two edges lexicographically.
  TwoK2Witness normalized() const;
  bool valid_in(const Graph& g) const;

  friend auto operator<=>(const TwoK2Witness&, const TwoK2Witness&) = default;
};

struct SplitPartition {
  std::vector<Vertex> clique;
  std::vector<Vertex> independent;

  bool valid_in(const Graph& g) const;
};

/// A permutation of V(G) in which every vertex's later neighbours form a
/// clique.
struct EliminationOrder {
  std::vector<Vertex> order;

  bool valid_in(const Graph& g) const;
};

/// First induced 2K2 over pairs of disjoint edges in lexicographic edge
/// order, or nullopt when g is 2K2-free.
std::optional<TwoK2Witness> find_induced_2k2(const Graph& g);
bool is_2k2_free(const Graph& g);

/// Hammer–Simeone degree-sequence test. The partition it produces is checked
/// against the definition before it is returned.
std::optional<SplitPartition> split_partition(const Graph& g);

/// Lexicographic BFS; the reverse of the visit order is returned when it is a
/// perfect elimination ordering.
std::optional<EliminationOrder> perfect_elimination_order(const Graph& g);
bool is_chordal(const Graph& g);
bool is_cochordal(const Graph& g);

std::string to_string(const TwoK2Witness& w);

}  // namespace gallai
