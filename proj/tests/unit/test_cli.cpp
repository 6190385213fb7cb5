#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using fermat::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "fermat_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("usage errors") {
  CHECK(call({}).code == 64);
  CHECK(call({"frobnicate"}).code == 64);
  CHECK(call({"count"}).code == 64);
  CHECK(call({"count", "--bounds", "4,2"}).code == 64);
  CHECK(call({"count", "--bounds", "0,2"}).code == 64);
  CHECK(call({"count", "--bounds", "a"}).code == 64);
  CHECK(call({"count", "--bounds", "1", "--workers", "0"}).code == 64);
  CHECK(call({"fiber-rank", "1", "2", "3"}).code == 64);
  CHECK(call({"fiber-rank", "1", "2", "x", "3"}).code == 64);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("parse_bounds") {
  CHECK(fermat::cli::parse_bounds("1,2,4") == std::vector<fermat::Int>{1, 2, 4});
  CHECK_THROWS(fermat::cli::parse_bounds(""));
  CHECK_THROWS(fermat::cli::parse_bounds("1,,2"));
  CHECK_THROWS(fermat::cli::parse_bounds("-1"));
}

TEST_CASE("fiber-rank and lines") {
  auto r = call({"fiber-rank", "1", "1", "1", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rank=4\n") != std::string::npos);
  CHECK(r.out.find("agreement=true") != std::string::npos);

  r = call({"fiber-rank", "1", "2", "3", "5"});
  CHECK(r.out.find("rank=1\n") != std::string::npos);
  CHECK(r.out.find("segre=rank-one") != std::string::npos);

  CHECK(call({"fiber-rank", "1", "0", "1", "1"}).code == 65);

  r = call({"lines", "1", "2", "3", "5"});
  CHECK(r.code == 0);
  std::size_t meets = 0;
  for (std::size_t pos = 0; (pos = r.out.find("meets=10", pos)) != std::string::npos; ++pos) ++meets;
  CHECK(meets == 27);
}

TEST_CASE("classify") {
  auto r = call({"classify", "1:1:1:1", "1:-1:1:-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("in_Z=true") != std::string::npos);
  CHECK(r.out.find("rank=4") != std::string::npos);
  CHECK(call({"classify", "1:1:1:1", "1:1:1:1"}).code == 65);
  CHECK(call({"classify", "1:1:1", "1:1:1:1"}).code == 65);
  CHECK(call({"classify", "0:0:0:0", "1:-1:0:0"}).code == 65);
}

TEST_CASE("verify-intersections and rank-survey") {
  auto r = call({"verify-intersections"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("900") != std::string::npos);

  r = call({"rank-survey", "--samples", "50", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("disagreements=0") != std::string::npos);
}

TEST_CASE("count output is identical across worker counts") {
  const auto one = call({"count", "--bounds", "1,2,4,8", "--workers", "1"});
  REQUIRE(one.code == 0);
  CHECK(one.out.rfind("B,ALL,IN_Z,NOT_IN_Z,IN_SOME_V,LIFTABLE_ONLY,SINGULAR_FIBER\n", 0) == 0);
  CHECK(one.out.find("8,39944,39848,96,") != std::string::npos);
  for (const char* w : {"2", "5"}) CHECK(call({"count", "--bounds", "1,2,4,8", "--workers", w}).out == one.out);
}

TEST_CASE("count to a file with points, then plot") {
  const auto csv = scratch("counts.csv");
  const auto svg = scratch("counts.svg");
  fs::remove(csv);
  fs::remove(svg);
  auto r = call({"count", "--bounds", "1,2,4", "--out", csv.string(), "--emit-points"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("IN_Z/ALL") != std::string::npos);
  CHECK(slurp(csv) == call({"count", "--bounds", "1,2,4"}).out);

  const auto points = slurp(csv.string() + ".points");
  CHECK(std::count(points.begin(), points.end(), '\n') == 6296);
  CHECK(points.rfind("0:0:0:1|", 0) == 0);

  r = call({"plot", csv.string(), svg.string()});
  CHECK(r.code == 0);
  const auto text = slurp(svg);
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("</svg>") != std::string::npos);
}

TEST_CASE("plot errors") {
  CHECK(call({"plot", scratch("does-not-exist.csv").string(), scratch("x.svg").string()}).code == 66);
  const auto empty = scratch("empty.csv");
  std::ofstream(empty) << "B,ALL,IN_Z,NOT_IN_Z,IN_SOME_V,LIFTABLE_ONLY,SINGULAR_FIBER\n";
  CHECK(call({"plot", empty.string(), scratch("x.svg").string()}).code == 65);
  const auto junk = scratch("junk.csv");
  std::ofstream(junk) << "hello\n";
  CHECK(call({"plot", junk.string(), scratch("x.svg").string()}).code == 65);

  const auto csv = scratch("ok.csv");
  std::ofstream(csv) << "B,ALL,IN_Z,NOT_IN_Z,IN_SOME_V,LIFTABLE_ONLY,SINGULAR_FIBER\n1,440,440,0,440,0,368\n";
  CHECK(call({"plot", csv.string(), "/nonexistent-dir/out.svg"}).code == 2);
}

TEST_CASE("enumerate writes one line per point") {
  const auto r = call({"enumerate", "--bound", "2"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1304);
  CHECK(call({"enumerate", "--bound", "2", "--out", "/nonexistent-dir/p.txt"}).code == 2);
}
