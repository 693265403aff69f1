#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "gallai/cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = gallai::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("intersect on the fixture") {
  const auto r = run({"intersect", "--fixture", "walther-zamfirescu-12"});
  CHECK(r.code == 0);
  CHECK(r.out == "order=10 count=42 method=enumeration\n");
  const auto d = run({"intersect", "--fixture", "walther-zamfirescu-12", "--method", "deletion"});
  CHECK(d.out == "order=10 count=- method=deletion\n");
}

TEST_CASE("intersect falls back to deletion when the cap trips") {
  const auto r = run({"intersect", "--cap", "3", "--input-format", "graph6"}, "C~\n");
  CHECK(r.code == 0);
  CHECK(r.out == "order=4 count=- method=deletion\n0\n1\n2\n3\n");
  CHECK(r.err.find("falling back") != std::string::npos);
}

TEST_CASE("longest") {
  const auto r = run({"longest", "--paths"}, "3 2\n0 1\n1 2\n");
  CHECK(r.code == 0);
  CHECK(r.out == "order=3 count=1\n0 1 2\n");
}

TEST_CASE("verify on generated split graphs") {
  const auto gen = run({"gen", "--class", "split", "--n", "9", "--count", "20", "--seed", "4"});
  CHECK(gen.code == 0);
  const auto r = run({"verify"}, gen.out);
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  int count = 0;
  for (std::string line; std::getline(lines, line); ++count) CHECK(line.rfind("verdict=holds ", 0) == 0);
  CHECK(count == 20);
  CHECK(run({"verify", "--generate", "split", "--n", "9", "--count", "20", "--seed", "4"}).out == r.out);
}

TEST_CASE("verify output fields") {
  CHECK(run({"verify"}, "DhC\n").out == "verdict=notApplicable reason=2k2 witness={0,1,3,4}\n");
  CHECK(run({"verify"}, "3 0\n").out == "verdict=notApplicable reason=edgeless\n");
  CHECK(run({"verify"}, "3 2\n0 1\n0 2\n").out == "verdict=holds delta={0} intersection={0,1,2}\n");
}

TEST_CASE("recognize and dominate") {
  CHECK(run({"recognize"}, "C^\n").code == 0);
  CHECK(run({"recognize"}, "DhC\n").out ==
        "twoK2free=0 witness={0,1,3,4} split=0 clique=- independent=- chordal=1 peo={4,3,2,1,0} "
        "cochordal=0\n");
  CHECK(run({"dominate"}, "DhC\n").out == "error=not2k2free witness={0,1,3,4}\n");
  CHECK(run({"dominate"}, "3 2\n0 1\n1 2\n").out == "path={0,1} order=2 dominating=1\n");
  CHECK(run({"dominate"}, "C~\n").out == "path={2,3,0,1} order=4 dominating=1\n");
  CHECK(run({"dominate"}, "2 0\n").out == "error=edgeless\n");
}

TEST_CASE("hunt") {
  const auto small = run({"hunt", "--exhaustive", "6"});
  CHECK(small.code == 0);
  CHECK(small.out.find("found=0") != std::string::npos);
  const auto wz = run({"hunt"}, "Dhc\nKhAAPWU_?_@?\n");
  CHECK(wz.code == 3);
  CHECK(wz.out == "KhAAPWU_?_@?\nscanned=2 skipped=0 found=1\n");
  CHECK(run({"hunt"}, "").out == "scanned=0 skipped=0 found=0\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "--fixture", "walther-zamfirescu-12", "--generate", "split"}).code == 1);
  CHECK(run({"verify", "--fixture", "nope"}).code == 1);
  CHECK(run({"verify", "/nonexistent/file"}).code == 2);
  CHECK(run({"verify", "--workers", "0"}).code == 1);
  const auto partial = run({"verify"}, "Dhc\n!!\nC~\n");
  CHECK(partial.code == 2);
  CHECK(partial.err.find("line 2") != std::string::npos);
  CHECK(partial.out == "verdict=holds delta={0,1,2,3,4} intersection={0,1,2,3,4}\n"
                       "verdict=holds delta={0,1,2,3} intersection={0,1,2,3}\n");
}

TEST_CASE("worker count does not change output") {
  const std::vector<std::string> base = {"intersect", "--generate", "2k2free", "--n", "9", "--count", "30"};
  auto with_workers = base;
  with_workers.insert(with_workers.end(), {"--workers", "3"});
  CHECK(run(base).out == run(with_workers).out);
}
