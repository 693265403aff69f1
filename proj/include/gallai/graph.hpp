#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gallai {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Adjacency is stored as one 64-bit row per vertex.
inline constexpr int kMaxVertices = 64;

inline constexpr VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline int popcount(VertexMask m) { return std::popcount(m); }

inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Ascending list of the vertices in `m`.
std::vector<Vertex> to_vertices(VertexMask m);
VertexMask to_mask(std::span<const Vertex> vertices);

/// Unordered vertex pair, stored with u < v once it belongs to a Graph.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  bool touches(Vertex w) const { return u == w || v == w; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class DuplicateEdges { reject, collapse };

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Holds both a bitset view (`neighbor_mask`) and a sorted list view
/// (`neighbors`) of every neighborhood. Edges are kept sorted
/// lexicographically with u < v.
class Graph {
 public:
  /// The graph with no vertices.
  Graph() = default;

  /// Throws GraphError on loops, out-of-range endpoints and (unless
  /// `duplicates == collapse`) repeated edges.
  static Graph from_edges(int n, std::span<const Edge> edges,
                          DuplicateEdges duplicates = DuplicateEdges::reject);

  /// Builds from adjacency rows; rows must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexMask> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t size() const { return edges_.size(); }
  bool empty_of_edges() const { return edges_.empty(); }

  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbor_mask(Vertex v) const { return adj_[v]; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Mask with one bit for every vertex.
  VertexMask vertex_mask() const;

  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  explicit Graph(std::vector<VertexMask> rows);

  std::vector<VertexMask> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Edge> edges_;
};

/// Strict by default: a repeated pair is an error.
Graph make_graph(int n, std::span<const Edge> edges,
                 DuplicateEdges duplicates = DuplicateEdges::reject);
Graph make_graph(int n, std::initializer_list<Edge> edges,
                 DuplicateEdges duplicates = DuplicateEdges::reject);

Graph complement(const Graph& g);

struct VertexDeletion {
  Graph graph;
  /// original_label[i] is the vertex of the input graph that became i.
  std::vector<Vertex> original_label;
};

/// Removes `v` and shifts the labels above it down by one.
VertexDeletion delete_vertex(const Graph& g, Vertex v);

/// Subgraph induced on `keep`, relabelled in increasing order.
Graph induced_subgraph(const Graph& g, VertexMask keep);

int max_degree(const Graph& g);

/// All vertices attaining the maximum degree. Throws on the 0-vertex graph.
std::vector<Vertex> max_degree_vertices(const Graph& g);

/// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);

/// Vertices reachable from `start` using only vertices in `allowed`.
VertexMask reachable_from(const Graph& g, Vertex start, VertexMask allowed);

/// The 0-vertex graph is not considered connected.
bool is_connected(const Graph& g);

/// True when `vertices` spans no edge of g.
bool is_independent(const Graph& g, VertexMask vertices);
bool is_clique(const Graph& g, VertexMask vertices);

// Small named families used throughout the tests and the CLI.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // center is vertex 0
Graph empty_graph(int n);

std::string to_string(const Edge& e);

}  // namespace gallai
