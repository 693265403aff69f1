#include "gallai/graph.hpp"

#include <algorithm>

namespace gallai {

std::vector<Vertex> to_vertices(VertexMask m) {
  std::vector<Vertex> out;
  out.reserve(popcount(m));
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

VertexMask to_mask(std::span<const Vertex> vertices) {
  VertexMask m = 0;
  for (Vertex v : vertices) m |= bit(v);
  return m;
}

Graph::Graph(std::vector<VertexMask> rows) : adj_(std::move(rows)), nbrs_(adj_.size()) {
  for (Vertex u = 0; u < order(); ++u) {
    nbrs_[u] = to_vertices(adj_[u]);
    for (Vertex v : nbrs_[u])
      if (u < v) edges_.push_back({u, v});
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges, DuplicateEdges duplicates) {
  if (n < 0 || n > kMaxVertices)
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  std::vector<VertexMask> rows(n, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw GraphError("edge " + to_string(e) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if ((rows[e.u] & bit(e.v)) && duplicates == DuplicateEdges::reject)
      throw GraphError("duplicate edge " + to_string(e.normalized()));
    rows[e.u] |= bit(e.v);
    rows[e.v] |= bit(e.u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_adjacency(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) throw GraphError("too many vertices");
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  for (Vertex u = 0; u < n; ++u) {
    if (rows[u] & ~all) throw GraphError("adjacency row " + std::to_string(u) + " out of range");
    if (rows[u] & bit(u)) throw GraphError("loop at vertex " + std::to_string(u));
    for (VertexMask m = rows[u]; m; m &= m - 1)
      if (!(rows[lowest(m)] & bit(u))) throw GraphError("adjacency is not symmetric");
  }
  return Graph(std::move(rows));
}

VertexMask Graph::vertex_mask() const {
  return order() == 64 ? ~VertexMask{0} : bit(order()) - 1;
}

Graph make_graph(int n, std::span<const Edge> edges, DuplicateEdges duplicates) {
  return Graph::from_edges(n, edges, duplicates);
}

Graph make_graph(int n, std::initializer_list<Edge> edges, DuplicateEdges duplicates) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), duplicates);
}

Graph complement(const Graph& g) {
  const VertexMask all = g.vertex_mask();
  std::vector<VertexMask> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = all & ~g.neighbor_mask(v) & ~bit(v);
  return Graph::from_adjacency(std::move(rows));
}

namespace {

// Keeps the bits of `m` selected by `keep`, packed down to the low end.
VertexMask compress(VertexMask m, VertexMask keep) {
  VertexMask out = 0;
  int i = 0;
  for (VertexMask k = keep; k; k &= k - 1, ++i)
    if (m & (k & -k)) out |= bit(i);
  return out;
}

}  // namespace

Graph induced_subgraph(const Graph& g, VertexMask keep) {
  keep &= g.vertex_mask();
  std::vector<VertexMask> rows;
  rows.reserve(popcount(keep));
  for (VertexMask k = keep; k; k &= k - 1) rows.push_back(compress(g.neighbor_mask(lowest(k)), keep));
  return Graph::from_adjacency(std::move(rows));
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v))
    throw GraphError("cannot delete vertex " + std::to_string(v) + " from a graph of order " +
                     std::to_string(g.order()));
  VertexDeletion out{induced_subgraph(g, g.vertex_mask() & ~bit(v)), {}};
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) out.original_label.push_back(u);
  return out;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::vector<Vertex> max_degree_vertices(const Graph& g) {
  if (g.order() == 0) throw GraphError("maximum degree of the empty vertex set");
  const int delta = max_degree(g);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == delta) out.push_back(v);
  return out;
}

VertexMask reachable_from(const Graph& g, Vertex start, VertexMask allowed) {
  VertexMask seen = bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    const Vertex v = lowest(frontier);
    frontier &= frontier - 1;
    const VertexMask fresh = g.neighbor_mask(v) & allowed & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  VertexMask left = g.vertex_mask();
  while (left) {
    const VertexMask comp = reachable_from(g, lowest(left), left);
    out.push_back(to_vertices(comp));
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return reachable_from(g, 0, g.vertex_mask()) == g.vertex_mask();
}

bool is_independent(const Graph& g, VertexMask vertices) {
  for (VertexMask m = vertices; m; m &= m - 1)
    if (g.neighbor_mask(lowest(m)) & vertices) return false;
  return true;
}

bool is_clique(const Graph& g, VertexMask vertices) {
  for (VertexMask m = vertices; m; m &= m - 1) {
    const Vertex v = lowest(m);
    if (((g.neighbor_mask(v) | bit(v)) & vertices) != vertices) return false;
  }
  return true;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_graph(n, e);
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  if (n >= 3) e.push_back({0, n - 1});
  return make_graph(n, e);
}

Graph complete_graph(int n) { return complement(empty_graph(n)); }

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make_graph(leaves + 1, e);
}

Graph empty_graph(int n) { return make_graph(n, std::span<const Edge>{}); }

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace gallai
