#include <doctest.h>

#include "gallai/generators.hpp"
#include "gallai/recognizers.hpp"

using namespace gallai;

// Reference values from an independent Python implementation of the
// documented update equations.

TEST_CASE("splitmix64 and derive_seed") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  CHECK(splitmix64(1) == 0x910a2dec89025cc1ULL);
  CHECK(splitmix64(42) == 0xbdd732262feb6e95ULL);
  CHECK(derive_seed(42, 3) == 0x43aa8652ad94b3a2ULL);
}

TEST_CASE("xorshift64* stream") {
  Xorshift64Star a(42);
  CHECK(a.next() == 0x31b0ece7c4f697a2ULL);
  CHECK(a.next() == 0x9008a3b1cb686f03ULL);
  CHECK(a.next() == 0x7c7173abd97be16fULL);
  Xorshift64Star zero(0);
  CHECK(zero.next() == 0x7bbcb40d550682d0ULL);
  CHECK(zero.next() == 0xde7fe413d00cc9fdULL);

  Xorshift64Star b(7);
  const std::vector<std::uint64_t> below = {0, 2, 3, 5, 6, 6, 4, 6};
  for (std::uint64_t expected : below) CHECK(b.below(10) == expected);
  Xorshift64Star c(7);
  CHECK(c.unit() == doctest::Approx(0.08170555950360558).epsilon(1e-15));
  CHECK(c.unit() == doctest::Approx(0.25826439633890563).epsilon(1e-15));
}

TEST_CASE("generator outputs match the reference implementation") {
  CHECK(erdos_renyi({6, 0.5, 42, GraphClass::erdos_renyi}) ==
        make_graph(6, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {0, 5}, {2, 5}, {3, 5}, {4, 5}}));
  CHECK(random_split_graph({7, 0.5, 42, GraphClass::split}) ==
        make_graph(7, {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 6}, {2, 5}}));
  CHECK(random_chordal_graph({7, 0.6, 9, GraphClass::chordal}) ==
        make_graph(7, {{0, 1}, {0, 2}, {0, 6}, {2, 3}, {2, 4}, {2, 5}}));
  CHECK(random_cochordal({7, 0.6, 9, GraphClass::cochordal}) ==
        complement(random_chordal_graph({7, 0.6, 9, GraphClass::chordal})));
}

TEST_CASE("generator examples") {
  CHECK(random_split_graph({1, 0.5, 3, GraphClass::split}) == empty_graph(1));
  const Graph g = random_split_graph({6, 0.0, 5, GraphClass::split});
  int isolated = 0;
  for (Vertex v = 0; v < 6; ++v) isolated += g.degree(v) == 0;
  const int clique = 6 - isolated;
  CHECK(static_cast<int>(g.size()) == (clique == 1 ? 0 : clique * (clique - 1) / 2));

  const Graph s = random_split_graph({10, 0.5, 42, GraphClass::split});
  CHECK(split_partition(s));
  CHECK(is_2k2_free(s));
  CHECK(random_cochordal({1, 0.5, 1, GraphClass::cochordal}) == empty_graph(1));
  CHECK(is_2k2_free(random_cochordal({9, 0.4, 7, GraphClass::cochordal})));
  CHECK(is_2k2_free(random_2k2_free({12, 0.3, 3, GraphClass::two_k2_free})));
  CHECK(random_2k2_free({8, 1.0, 3, GraphClass::two_k2_free}) == complete_graph(8));
  CHECK(erdos_renyi({8, 0.0, 1, GraphClass::erdos_renyi}) == empty_graph(8));
  CHECK(erdos_renyi({8, 1.0, 1, GraphClass::erdos_renyi}) == complete_graph(8));
  CHECK(generate({0, 0.5, 1, GraphClass::two_k2_free}).order() == 0);
}

TEST_CASE("repair of 2K2") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Xorshift64Star rng(seed);
    const auto fixed = repair_to_2k2_free(make_graph(4, {{0, 1}, {2, 3}}), rng);
    CHECK(is_2k2_free(fixed.graph));
    CHECK(fixed.repairs == 1);  // any single cross edge yields P4
    CHECK(fixed.graph.size() == 3);
  }
}

TEST_CASE("determinism, validity and repair bound") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    const GenSpec spec{static_cast<int>(i % 20), 0.05 * static_cast<double>(i % 21), derive_seed(1, i),
                       static_cast<GraphClass>(i % 5)};
    const Graph g = generate(spec);
    CHECK(g == generate(spec));
    CHECK(g.order() == spec.n);
    switch (spec.graph_class) {
      case GraphClass::split: CHECK(split_partition(g)); break;
      case GraphClass::chordal: CHECK(is_chordal(g)); break;
      case GraphClass::cochordal: CHECK(is_cochordal(g)); break;
      case GraphClass::two_k2_free: CHECK(is_2k2_free(g)); break;
      case GraphClass::erdos_renyi: break;
    }
    if (spec.graph_class == GraphClass::two_k2_free) {
      GenSpec base = spec;
      base.graph_class = GraphClass::erdos_renyi;
      const Graph start = erdos_renyi(base);
      Xorshift64Star rng(derive_seed(spec.seed, 1));
      const auto repaired = repair_to_2k2_free(start, rng);
      CHECK(repaired.graph == g);
      const int pairs = spec.n * (spec.n - 1) / 2;
      CHECK(repaired.repairs <= pairs - static_cast<int>(start.size()));
      CHECK(static_cast<int>(g.size()) == static_cast<int>(start.size()) + repaired.repairs);
    }
  }
}

TEST_CASE("generator argument checks") {
  CHECK_THROWS_AS(random_split_graph({5, 0.5, 1, GraphClass::chordal}), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi({65, 0.5, 1, GraphClass::erdos_renyi}), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi({-1, 0.5, 1, GraphClass::erdos_renyi}), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi({5, 1.5, 1, GraphClass::erdos_renyi}), std::invalid_argument);
  CHECK(parse_graph_class("2k2free") == GraphClass::two_k2_free);
  CHECK_FALSE(parse_graph_class("planar"));
}

TEST_CASE("labelled enumeration") {
  CHECK(labelled_graph_count(0) == 1);
  CHECK(labelled_graph_count(4) == 64);
  // bit 0 is pair (0,1), bit 1 is (0,2), bit 2 is (1,2), bit 3 is (0,3)
  CHECK(labelled_graph(4, 0b1001) == make_graph(4, {{0, 1}, {0, 3}}));
  CHECK_THROWS_AS(labelled_graph(3, 8), std::invalid_argument);
}
