#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "immaculate/cli.hpp"

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int code = immaculate::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string temp_file(std::string const& name, std::string const& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
  }
}  // namespace

TEST_CASE("count") {
  auto r = run({"count", "--what", "a", "--n", "10"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 1 2 7 35 236 2037 21695 277966 4198635 73558135\n");
  CHECK(run({"count", "--what", "b", "--n", "5", "--format", "json"}).out
        == "[1,1,2,6,24,120]\n");
  CHECK(run({"count", "--what", "dim", "--n", "4"}).out == "1 2 7 35\n");
  CHECK(run({"count", "--what", "g", "--shape", "2,1,2"}).out == "4\n");
  CHECK(run({"count", "--what", "f", "--shape", "3,2"}).out == "5\n");
  CHECK(run({"count", "--what", "kostka", "--shape", "2,1,2", "--content",
             "1,1,1,1,1"})
            .out
        == "4\n");
  // Values past 64 bits print exactly.
  auto big = run({"count", "--what", "b", "--n", "25", "--format", "json"});
  CHECK(big.out.find("15511210043330985984000000") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"count", "--what", "z", "--n", "3"},
           {"count", "--what", "g", "--shape", "2,,1"},
           {"count", "--what", "g", "--shape", "2,0"},
           {"count", "--what", "f", "--shape", "1,2"},
           {"count", "--what", "a"},
           {"count", "--what", "a", "--n", "3", "--bogus"},
           {"cayley", "--n", "7"},
           {"cayley", "--n", "3", "--format", "xml"},
           {"enumerate", "immacutations", "--n", "4", "--class", "3,1"},
           {"young-units", "--n", "6"},
           {"young-units", "--n", "5", "--check"},
           {"verify", "--suite", "young", "--max-n", "5"},
           {"map", "--direction", "tab2imm", "--input", "/nonexistent.json"},
       }) {
    auto r = run(args);
    CAPTURE(r.err);
    CHECK(r.code == 2);
    CHECK(!r.err.empty());
    CHECK(r.out.empty());
  }
}

TEST_CASE("help exits 0") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cayley") != std::string::npos);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "tableaux", "--shape", "2,1"}).out
        == "1 2 / 3\n1 3 / 2\n");
  CHECK(run({"enumerate", "tableaux", "--shape", "2,1", "--format", "json"}).out
        == R"([{"rows":[[1,2],[3]],"shape":[2,1]},{"rows":[[1,3],[2]],"shape":[2,1]}])"
           "\n");
  CHECK(run({"enumerate", "tableaux", "--shape", "2,1", "--content", "2,1"}).out
        == "1 1 / 2\n");
  CHECK(run({"enumerate", "compositions", "--n", "3", "--order", "triangle"}).out
        == "1,1,1\n3\n1,2\n2,1\n");
  CHECK(run({"enumerate", "immacutations", "--n", "4", "--class", "3,1,0"}).out
        == "t4 ({}, {}, {1}, {1}, {}, {})\n"
           "t5 ({}, {}, {1}, {2}, {}, {})\n"
           "t6 ({}, {}, {2}, {1}, {}, {})\n"
           "t7 ({}, {}, {2}, {2}, {}, {})\n");
}

TEST_CASE("map") {
  auto pair = temp_file(
      "immaculate_pair.json",
      R"({"first":{"shape":[1,2,1,2],"rows":[[1],[2,6],[3],[4,5]]},)"
      R"("second":{"shape":[1,2,1,2],"rows":[[1],[2,4],[3],[5,6]]}})");
  auto r = run({"map", "--direction", "tab2imm", "--input", pair});
  CHECK(r.code == 0);
  CHECK(r.out
        == R"({"class":[5,3,2,0],"entries":[[],[],[4],[2],[],[],[1],[1]],"order":6})"
           "\n");

  auto imm = temp_file(
      "immaculate_imm.json",
      R"([{"order":3,"class":[1,0],"entries":[[1],[2],[],[]]}])");
  r = run({"map", "--direction", "imm2tab", "--input", imm});
  CHECK(r.code == 0);
  CHECK(r.out
        == R"([{"first":{"rows":[[1,2],[3]],"shape":[2,1]},"second":{"rows":[[1,3],[2]],"shape":[2,1]}}])"
           "\n");

  auto bad = temp_file("immaculate_bad.json", R"({"order":3,"class":[1,0]})");
  CHECK(run({"map", "--direction", "imm2tab", "--input", bad}).code == 2);
  auto junk = temp_file("immaculate_junk.json", "{not json");
  CHECK(run({"map", "--direction", "imm2tab", "--input", junk}).code == 2);
  auto invalid = temp_file(
      "immaculate_invalid.json",
      R"({"order":3,"class":[1,0],"entries":[[3],[2],[],[]]})");
  CHECK(run({"map", "--direction", "imm2tab", "--input", invalid}).code == 2);
}

TEST_CASE("cayley") {
  auto csv = run({"cayley", "--n", "3", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out
        == "id,t1,t2,t3,t4,t5,t6,t7\n"
           "t1,t1,t1,t1,t1,t1,t1,t1\n"
           "t2,t1,t2,t3,t4,t5,t6,t7\n"
           "t3,t1,t3,t3,t1,t1,t1,t1\n"
           "t4,t1,t4,t1,t4,t5,t1,t1\n"
           "t5,t1,t5,t1,t1,t1,t4,t5\n"
           "t6,t1,t6,t1,t6,t7,t1,t1\n"
           "t7,t1,t7,t1,t1,t1,t6,t7\n");
  auto md = run({"cayley", "--n", "2", "--format", "markdown"});
  CHECK(md.out == "|   | t1 | t2 |\n|---|---|---|\n| t1 | t1 | t1 |\n| t2 | t1 | t2 |\n");
  auto json = run({"cayley", "--n", "1", "--format", "json"});
  CHECK(json.out
        == R"({"elements":[{"class":[0],"entries":[[],[]],"id":"t1","order":1}],"order":1,"table":[["t1"]]})"
           "\n");
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "all", "--max-n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("monoid n=4") != std::string::npos);
  CHECK(run({"verify", "--suite", "young", "--max-n", "5", "--long"}).code == 0);
}

TEST_CASE("young-units") {
  auto r = run({"young-units", "--n", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find(R"({"coeff":"-1/2","perm":[2,1]})") != std::string::npos);
  auto text = run({"young-units", "--n", "2"});
  CHECK(text.out == "e^(2)_{1,1} = 1/2*[1,2] 1/2*[2,1]\n"
                    "e^(1,1)_{1,1} = 1/2*[1,2] -1/2*[2,1]\n");
  CHECK(run({"young-units", "--n", "4", "--check"}).code == 0);
}

TEST_CASE("output is byte-deterministic") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"cayley", "--n", "4", "--format", "json"},
           {"enumerate", "immacutations", "--n", "5", "--format", "json"},
           {"young-units", "--n", "3", "--format", "json"},
           {"verify", "--suite", "all", "--max-n", "3"},
       }) {
    CHECK(run(args).out == run(args).out);
  }
}
