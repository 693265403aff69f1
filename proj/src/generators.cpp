#include "gallai/generators.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gallai/recognizers.hpp"

namespace gallai {

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index));
}

Xorshift64Star::Xorshift64Star(std::uint64_t seed) : state_(splitmix64(seed)) {
  if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t Xorshift64Star::next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1DULL;
}

std::uint64_t Xorshift64Star::below(std::uint64_t bound) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
}

double Xorshift64Star::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Xorshift64Star::chance(double p) { return unit() < p; }

namespace {

void check_spec(const GenSpec& spec, GraphClass expected) {
  if (spec.graph_class != expected)
    throw std::invalid_argument("generator for " + std::string(to_string(expected)) +
                                " called with class " + std::string(to_string(spec.graph_class)));
  if (spec.n < 0 || spec.n > kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(spec.n) + " out of range");
  if (!(spec.density >= 0.0 && spec.density <= 1.0))
    throw std::invalid_argument("density must lie in [0, 1]");
}

std::vector<Vertex> random_permutation(int n, Xorshift64Star& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  return perm;
}

void add_edge(std::vector<VertexMask>& rows, Vertex u, Vertex v) {
  rows[u] |= bit(v);
  rows[v] |= bit(u);
}

Graph chordal_from(const GenSpec& spec) {
  Xorshift64Star rng(spec.seed);
  std::vector<VertexMask> rows(spec.n, 0);
  // earlier[w]: neighbours of w that were present when w was inserted. It is a
  // clique and w sees all of it.
  std::vector<VertexMask> earlier(spec.n, 0);
  for (Vertex v = 1; v < spec.n; ++v) {
    const Vertex w = static_cast<Vertex>(rng.below(v));
    const VertexMask clique = earlier[w] | bit(w);
    for (VertexMask m = clique; m; m &= m - 1)
      if (rng.chance(spec.density)) earlier[v] |= bit(lowest(m));
    for (VertexMask m = earlier[v]; m; m &= m - 1) add_edge(rows, v, lowest(m));
  }
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace

Graph random_split_graph(const GenSpec& spec) {
  check_spec(spec, GraphClass::split);
  if (spec.n == 0) return Graph{};
  Xorshift64Star rng(spec.seed);
  const int clique_size = 1 + static_cast<int>(rng.below(spec.n));
  const auto perm = random_permutation(spec.n, rng);
  std::vector<VertexMask> rows(spec.n, 0);
  for (int i = 0; i < clique_size; ++i)
    for (int j = i + 1; j < clique_size; ++j) add_edge(rows, perm[i], perm[j]);
  for (int i = 0; i < clique_size; ++i)
    for (int j = clique_size; j < spec.n; ++j)
      if (rng.chance(spec.density)) add_edge(rows, perm[i], perm[j]);
  return Graph::from_adjacency(std::move(rows));
}

Graph random_chordal_graph(const GenSpec& spec) {
  check_spec(spec, GraphClass::chordal);
  return chordal_from(spec);
}

Graph random_cochordal(const GenSpec& spec) {
  check_spec(spec, GraphClass::cochordal);
  return complement(chordal_from(spec));
}

Graph erdos_renyi(const GenSpec& spec) {
  check_spec(spec, GraphClass::erdos_renyi);
  Xorshift64Star rng(spec.seed);
  std::vector<VertexMask> rows(spec.n, 0);
  for (Vertex v = 1; v < spec.n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (rng.chance(spec.density)) add_edge(rows, u, v);
  return Graph::from_adjacency(std::move(rows));
}

RepairResult repair_to_2k2_free(Graph g, Xorshift64Star& rng) {
  RepairResult out{std::move(g), 0};
  while (const auto w = find_induced_2k2(out.graph)) {
    const Edge cross[4] = {{w->a, w->c}, {w->a, w->d}, {w->b, w->c}, {w->b, w->d}};
    std::vector<Edge> edges = out.graph.edges();
    edges.push_back(cross[rng.below(4)]);
    out.graph = make_graph(out.graph.order(), edges);
    ++out.repairs;
  }
  return out;
}

Graph random_2k2_free(const GenSpec& spec) {
  check_spec(spec, GraphClass::two_k2_free);
  GenSpec base = spec;
  base.graph_class = GraphClass::erdos_renyi;
  Graph g = erdos_renyi(base);
  // The repair draws continue from a stream independent of the base graph's.
  Xorshift64Star rng(derive_seed(spec.seed, 1));
  return repair_to_2k2_free(std::move(g), rng).graph;
}

Graph generate(const GenSpec& spec) {
  switch (spec.graph_class) {
    case GraphClass::split: return random_split_graph(spec);
    case GraphClass::chordal: return random_chordal_graph(spec);
    case GraphClass::cochordal: return random_cochordal(spec);
    case GraphClass::two_k2_free: return random_2k2_free(spec);
    case GraphClass::erdos_renyi: return erdos_renyi(spec);
  }
  throw std::invalid_argument("unknown graph class");
}

std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::split: return "split";
    case GraphClass::chordal: return "chordal";
    case GraphClass::cochordal: return "cochordal";
    case GraphClass::two_k2_free: return "2k2free";
    case GraphClass::erdos_renyi: return "erdos-renyi";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view text) {
  for (GraphClass c : {GraphClass::split, GraphClass::chordal, GraphClass::cochordal,
                       GraphClass::two_k2_free, GraphClass::erdos_renyi})
    if (to_string(c) == text) return c;
  return std::nullopt;
}

std::uint64_t labelled_graph_count(int n) {
  const int pairs = n * (n - 1) / 2;
  if (n < 0 || pairs >= 64) throw std::invalid_argument("too many vertex pairs to enumerate");
  return std::uint64_t{1} << pairs;
}

Graph labelled_graph(int n, std::uint64_t edge_bits) {
  if (edge_bits >= labelled_graph_count(n)) throw std::invalid_argument("edge bits out of range");
  std::vector<VertexMask> rows(n, 0);
  int i = 0;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u, ++i)
      if ((edge_bits >> i) & 1U) add_edge(rows, u, v);
  return Graph::from_adjacency(std::move(rows));
}

}  // namespace gallai
