#pragma once

// Small brute-force oracles shared by the test binaries. They are written
// against plain adjacency matrices so they share no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "gallai/generators.hpp"
#include "gallai/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const gallai::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

/// Any 4-subset whose induced subgraph is exactly two disjoint edges.
inline bool has_induced_2k2(const gallai::Graph& g) {
  const Matrix m = matrix(g);
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int q[4] = {a, b, c, d};
          int edges = 0;
          int deg[4] = {0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (m[q[i]][q[j]]) ++edges, ++deg[i], ++deg[j];
          if (edges == 2 && deg[0] == 1 && deg[1] == 1 && deg[2] == 1 && deg[3] == 1) return true;
        }
  return false;
}

/// Every simple path (as a vertex sequence, both orientations, order >= 1).
inline void for_each_path(const gallai::Graph& g, const std::function<void(const std::vector<int>&)>& fn) {
  const Matrix m = matrix(g);
  const int n = g.order();
  std::vector<int> seq;
  std::vector<bool> used(n, false);
  std::function<void()> grow = [&] {
    fn(seq);
    for (int w = 0; w < n; ++w)
      if (!used[w] && m[seq.back()][w]) {
        used[w] = true;
        seq.push_back(w);
        grow();
        seq.pop_back();
        used[w] = false;
      }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = true;
    seq = {s};
    grow();
    used[s] = false;
  }
}

inline int longest_order(const gallai::Graph& g) {
  std::size_t best = 0;
  for_each_path(g, [&](const std::vector<int>& p) { best = std::max(best, p.size()); });
  return static_cast<int>(best);
}

/// Longest paths as sequences with front <= back, sorted.
inline std::vector<std::vector<int>> longest_paths(const gallai::Graph& g) {
  const std::size_t best = static_cast<std::size_t>(longest_order(g));
  std::set<std::vector<int>> out;
  for_each_path(g, [&](const std::vector<int>& p) {
    if (p.size() == best && p.front() <= p.back()) out.insert(p);
  });
  return {out.begin(), out.end()};
}

inline std::vector<int> common_vertices(const gallai::Graph& g) {
  const auto paths = longest_paths(g);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (std::all_of(paths.begin(), paths.end(),
                    [&](const auto& p) { return std::find(p.begin(), p.end(), v) != p.end(); }))
      out.push_back(v);
  return out;
}

/// Shortest-cycle style chordality test: a graph is chordal iff no induced
/// cycle of length >= 4 exists. Checked over vertex subsets (n <= 8).
inline bool is_chordal(const gallai::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  for (std::uint32_t sub = 0; sub < (1U << n); ++sub) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (sub >> v & 1U) vs.push_back(v);
    if (vs.size() < 4) continue;
    // induced cycle: connected and 2-regular
    bool two_regular = true;
    for (int v : vs) {
      int d = 0;
      for (int w : vs) d += m[v][w];
      two_regular = two_regular && d == 2;
    }
    if (!two_regular) continue;
    std::vector<int> stack = {vs[0]};
    std::set<int> seen = {vs[0]};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : vs)
        if (m[v][w] && seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() == vs.size()) return false;
  }
  return true;
}

/// Split iff some subset is a clique with an independent complement.
inline bool is_split(const gallai::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix(g);
  for (std::uint32_t k = 0; k < (1U << n); ++k) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        const bool in_k = (k >> u & 1U) && (k >> v & 1U);
        const bool in_i = !(k >> u & 1U) && !(k >> v & 1U);
        if (in_k && !m[u][v]) ok = false;
        if (in_i && m[u][v]) ok = false;
      }
    if (ok) return true;
  }
  return false;
}

/// Deterministic mixed corpus: Erdős–Rényi graphs with n in [lo, hi].
inline std::vector<gallai::Graph> random_graphs(int count, int lo, int hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<gallai::Graph> out;
  for (int i = 0; i < count; ++i) {
    const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    const double density = 0.1 + 0.8 * static_cast<double>(rng() % 1000) / 1000.0;
    out.push_back(gallai::erdos_renyi({n, density, rng(), gallai::GraphClass::erdos_renyi}));
  }
  return out;
}

}  // namespace oracle
