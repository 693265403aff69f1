#include "gallai/recognizers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gallai {

TwoK2Witness TwoK2Witness::normalized() const {
  Edge first = Edge{a, b}.normalized();
  Edge second = Edge{c, d}.normalized();
  if (second < first) std::swap(first, second);
  return {first.u, first.v, second.u, second.v};
}

bool TwoK2Witness::valid_in(const Graph& g) const {
  for (Vertex v : {a, b, c, d})
    if (!g.contains(v)) return false;
  if (popcount(bit(a) | bit(b) | bit(c) | bit(d)) != 4) return false;
  return g.adjacent(a, b) && g.adjacent(c, d) && !g.adjacent(a, c) && !g.adjacent(a, d) &&
         !g.adjacent(b, c) && !g.adjacent(b, d);
}

bool SplitPartition::valid_in(const Graph& g) const {
  const VertexMask k = to_mask(clique);
  const VertexMask i = to_mask(independent);
  for (Vertex v : clique)
    if (!g.contains(v)) return false;
  for (Vertex v : independent)
    if (!g.contains(v)) return false;
  if (popcount(k) != static_cast<int>(clique.size()) ||
      popcount(i) != static_cast<int>(independent.size()))
    return false;
  if ((k & i) != 0 || (k | i) != g.vertex_mask()) return false;
  return is_clique(g, k) && is_independent(g, i);
}

bool EliminationOrder::valid_in(const Graph& g) const {
  if (static_cast<int>(order.size()) != g.order()) return false;
  VertexMask later = 0;
  for (Vertex v : order) {
    if (!g.contains(v) || (later & bit(v))) return false;
    later |= bit(v);
  }
  if (later != g.vertex_mask()) return false;
  for (Vertex v : order) {
    later &= ~bit(v);
    if (!is_clique(g, g.neighbor_mask(v) & later)) return false;
  }
  return true;
}

std::optional<TwoK2Witness> find_induced_2k2(const Graph& g) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = edges[i];
    const VertexMask near = g.neighbor_mask(e.u) | g.neighbor_mask(e.v) | bit(e.u) | bit(e.v);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge f = edges[j];
      if ((near & (bit(f.u) | bit(f.v))) == 0) return TwoK2Witness{e.u, e.v, f.u, f.v};
    }
  }
  return std::nullopt;
}

bool is_2k2_free(const Graph& g) { return !find_induced_2k2(g).has_value(); }

std::optional<SplitPartition> split_partition(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex x, Vertex y) { return g.degree(x) > g.degree(y); });

  // m = max{ i : d_i >= i - 1 } with 1-based i.
  int m = 0;
  for (int i = 1; i <= n; ++i)
    if (g.degree(by_degree[i - 1]) >= i - 1) m = i;

  long top = 0;
  long rest = 0;
  for (int i = 0; i < n; ++i) (i < m ? top : rest) += g.degree(by_degree[i]);
  if (top != static_cast<long>(m) * (m - 1) + rest) return std::nullopt;

  SplitPartition out;
  out.clique.assign(by_degree.begin(), by_degree.begin() + m);
  out.independent.assign(by_degree.begin() + m, by_degree.end());
  std::sort(out.clique.begin(), out.clique.end());
  std::sort(out.independent.begin(), out.independent.end());
  if (!out.valid_in(g))
    throw std::logic_error("split_partition: degree test passed but the partition is invalid");
  return out;
}

std::optional<EliminationOrder> perfect_elimination_order(const Graph& g) {
  const int n = g.order();
  // Labels hold the visit stamps of already-visited neighbours, largest first;
  // stamps count down from n so lexicographic comparison of the vectors is
  // the LexBFS order.
  std::vector<std::vector<int>> label(n);
  std::vector<Vertex> visit;
  visit.reserve(n);
  VertexMask unvisited = g.vertex_mask();
  for (int stamp = n; stamp >= 1; --stamp) {
    Vertex pick = lowest(unvisited);
    for (VertexMask m = unvisited & (unvisited - 1); m; m &= m - 1) {
      const Vertex v = lowest(m);
      if (label[v] > label[pick]) pick = v;
    }
    unvisited &= ~bit(pick);
    visit.push_back(pick);
    for (VertexMask m = g.neighbor_mask(pick) & unvisited; m; m &= m - 1)
      label[lowest(m)].push_back(stamp);
  }
  EliminationOrder peo{{visit.rbegin(), visit.rend()}};
  if (!peo.valid_in(g)) return std::nullopt;
  return peo;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

bool is_cochordal(const Graph& g) { return is_chordal(complement(g)); }

std::string to_string(const TwoK2Witness& w) {
  return std::to_string(w.a) + "," + std::to_string(w.b) + "," + std::to_string(w.c) + "," +
         std::to_string(w.d);
}

}  // namespace gallai
