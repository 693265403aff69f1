#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "gallai/graph.hpp"

namespace gallai {

/// xorshift64* (Vigna 2016). With state x != 0, one step is
///
///     x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
///     output = x * 0x2545F4914F6CDD1D   (mod 2^64)
///
/// The state is seeded with splitmix64(seed), replaced by a fixed odd
/// constant in the (single) case where that is zero.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed);

  std::uint64_t next();
  /// floor(next() * bound / 2^64): uniform on [0, bound) up to 2^-64 bias.
  std::uint64_t below(std::uint64_t bound);
  /// Top 53 bits of next() scaled to [0, 1).
  double unit();
  /// unit() < p.
  bool chance(double p);

 private:
  std::uint64_t state_;
};

/// splitmix64 finaliser:
///   z = x + 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for instance `index` of a batch: splitmix64(seed ^ splitmix64(index)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

enum class GraphClass { split, chordal, cochordal, two_k2_free, erdos_renyi };

struct GenSpec {
  int n = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  GraphClass graph_class = GraphClass::erdos_renyi;
};

// Each generator throws std::invalid_argument when spec.graph_class does not
// match it, n is outside [0, 64] or density is outside [0, 1].

/// Clique size uniform in [1, n], vertices assigned to the clique by a random
/// permutation, each clique–independent pair an edge with probability density.
Graph random_split_graph(const GenSpec& spec);

/// Vertices are added one at a time; each joins a random subset (each member
/// kept with probability density) of a clique chosen uniformly among the
/// cliques {w} ∪ N_earlier(w) of the vertices already present. Reversing the
/// insertion order gives a perfect elimination ordering.
Graph random_chordal_graph(const GenSpec& spec);

/// Complement of random_chordal_graph with the same parameters.
Graph random_cochordal(const GenSpec& spec);

/// Erdős–Rényi, then while an induced 2K2 ab, cd remains, add one of the four
/// cross edges ac, ad, bc, bd chosen uniformly.
Graph random_2k2_free(const GenSpec& spec);

Graph erdos_renyi(const GenSpec& spec);

/// Dispatches on spec.graph_class.
Graph generate(const GenSpec& spec);

struct RepairResult {
  Graph graph;
  int repairs = 0;
};

/// The repair loop of random_2k2_free applied to an arbitrary graph.
RepairResult repair_to_2k2_free(Graph g, Xorshift64Star& rng);

std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view text);

// Exhaustive labelled enumeration. Bit i of `edge_bits` is the i-th pair in
// graph6 order (0,1), (0,2), (1,2), (0,3), ...

/// 2^C(n,2).
std::uint64_t labelled_graph_count(int n);
Graph labelled_graph(int n, std::uint64_t edge_bits);

}  // namespace gallai
