#include <doctest.h>

#include "gallai/fixtures.hpp"
#include "gallai/graph_io.hpp"
#include "gallai/longest_path.hpp"
#include "support.hpp"

using namespace gallai;

TEST_CASE("fixture validation: walther-zamfirescu-12") {
  const Graph g = fixture("walther-zamfirescu-12");
  CHECK(g.order() == 12);
  CHECK(g.size() == 15);
  CHECK(is_connected(g));
  // networkx.to_graph6_bytes of the shipped edge list
  CHECK(write_graph6(g) == "KhAAPWU_?_@?");

  // independent enumeration of every longest path
  const auto paths = oracle::longest_paths(g);
  CHECK(paths.front().size() == 10);
  CHECK(oracle::common_vertices(g).empty());

  const auto report = intersection_of_longest_paths(g, IntersectionMethod::enumeration);
  CHECK(report.longest_order == 10);
  CHECK(report.intersection.empty());
  CHECK(report.path_count == paths.size());
  CHECK(intersection_of_longest_paths(g, IntersectionMethod::deletion).intersection.empty());
}

TEST_CASE("fixture lookup") {
  CHECK(fixture_names() == std::vector<std::string>{"walther-zamfirescu-12"});
  CHECK_THROWS_AS(fixture("unknown"), std::out_of_range);
}
