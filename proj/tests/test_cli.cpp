#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "ekcodes/cli.hpp"
#include "ekcodes/io.hpp"
#include "ekcodes/verify.hpp"

using namespace ekc;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ekcodes");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ekcodes_cli_" + name)).string();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("argument parsing helpers") {
  CHECK(parse_parts("1,8|2,3") == std::vector<std::vector<int>>{{1, 8}, {2, 3}});
  CHECK(parse_parts(" 0 , 2 | 1 ") == std::vector<std::vector<int>>{{0, 2}, {1}});
  CHECK(parse_int_list("50,100,200") == std::vector<int>{50, 100, 200});
  CHECK_THROWS(parse_int_list("1,x"));
  CHECK_THROWS(parse_parts("1,,2|3"));
}

TEST_CASE("dist") {
  auto r = run({"dist", "--n", "9", "--k", "2", "--a", "1,8|2,3", "--b", "2,0|3,4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "distance: 3\n");
  r = run({"dist", "--n", "3", "--k", "2", "--q", "3", "--a", "1,0,2", "--b", "1,2,0", "--format",
           "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "{\"distance\":2}\n");
  r = run({"dist", "--n", "5", "--k", "2", "--a", "0,1|1,2", "--b", "0,1|2,3"});
  CHECK(r.code == kExitInvalidInput);
  CHECK(contains(r.err, "error"));
}

TEST_CASE("usage errors exit 1, help exits 0") {
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"bogus"}).code == kExitInvalidInput);
  CHECK(run({"dist", "--n", "9", "--k", "2", "--a", "0,1|2,3", "--b", "0,1|2,3", "--nope"}).code ==
        kExitInvalidInput);
  CHECK(run({"greedy", "--n", "9", "--k", "2"}).code == kExitInvalidInput);
  CHECK(run({"bound", "--kind", "upper", "--n", "9", "--k", "2", "--d", "3", "--format", "xml"})
            .code == kExitInvalidInput);
  const auto help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(contains(help.out, "greedy"));
}

TEST_CASE("bound and known") {
  auto r = run({"bound", "--kind", "upper", "--n", "9", "--k", "2", "--d", "3", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "\"exact\":\"9\""));
  CHECK(contains(r.out, "\"split\":\"1,1\""));
  r = run({"bound", "--kind", "split", "--n", "9", "--k", "2", "--d", "3", "--u", "0", "--v", "2"});
  CHECK(contains(r.out, "exact: 18"));
  r = run({"bound", "--kind", "packing", "--n", "8", "--k", "3", "--t", "2"});
  CHECK(contains(r.out, "exact: 28/3"));
  CHECK(contains(r.out, "floor: 9"));
  r = run({"bound", "--kind", "asymptotic", "--variant", "pair", "--k", "3", "--d", "5"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "1/18"));
  r = run({"bound", "--kind", "asymptotic", "--variant", "qary-pair", "--q", "2", "--k", "2", "--d",
           "3"});
  CHECK(r.code == kExitInvalidInput);
  r = run({"known", "--n", "17", "--k", "2", "--d", "3", "--format", "csv"});
  CHECK(r.out == "known,exact,floor,split,kind,source\ntrue,34,34,null,exact,n(n-1)/8 for n = 1 mod 8\n");
  r = run({"known", "--n", "10", "--k", "2", "--d", "3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "known: false"));
}

TEST_CASE("antagonistic check, orbit and search") {
  auto r = run({"antagonistic", "check", "--m", "9", "--s", "1,8", "--t", "2,3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "antagonistic: true"));
  r = run({"antagonistic", "check", "--m", "9", "--s", "1,2", "--t", "3,4"});
  CHECK(r.code == kExitVerificationFailed);
  CHECK(contains(r.out, "condition (i)"));
  r = run({"antagonistic", "orbit", "--m", "19", "--s", "1,5,19", "--t", "2,13,15"});
  CHECK(r.code == kExitOk);
  const Code nineteen = code_from_json(r.out.substr(0, r.out.find('\n')));
  CHECK(nineteen.size() == 19);
  CHECK(nineteen.verified_min_distance == 5);
  CHECK(contains(r.err, "verified_min_distance: 5"));
  r = run({"antagonistic", "orbit", "--m", "10", "--s", "0,1", "--t", "2,7"});
  CHECK(r.code == kExitVerificationFailed);
  r = run({"antagonistic", "search", "--k", "2", "--m", "9", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "\"exhausted\":true"));
  CHECK(contains(r.out, "\"0,1|2,4\""));
  r = run({"antagonistic", "search", "--k", "2", "--m", "8"});
  CHECK(r.code == kExitSearchFailed);
}

TEST_CASE("search frontier round trip through files") {
  const auto frontier = temp_path("frontier.txt");
  auto r = run({"antagonistic", "search", "--k", "3", "--m", "25", "--max-nodes", "500",
                "--frontier-out", frontier, "--format", "json"});
  CHECK(contains(r.out, "\"budget_hit\":true"));
  REQUIRE(std::filesystem::exists(frontier));
  int rounds = 0;
  while (!contains(r.out, "\"exhausted\":true") && rounds++ < 500) {
    r = run({"antagonistic", "search", "--k", "3", "--m", "25", "--max-nodes", "500", "--resume",
             frontier, "--frontier-out", frontier, "--format", "json"});
    REQUIRE(r.code != kExitInvalidInput);
  }
  CHECK(contains(r.out, "\"exhausted\":true"));
  CHECK(run({"antagonistic", "search", "--k", "2", "--m", "9", "--resume", frontier}).code ==
        kExitInvalidInput);
  std::filesystem::remove(frontier);
}

TEST_CASE("greedy writes a code that verify accepts, in any thread count") {
  const auto path = temp_path("greedy.json");
  std::string first;
  for (const std::string threads : {"1", "2", "4"}) {
    const auto r = run({"greedy", "--n", "12", "--k", "2", "--d", "3", "--seed", "4", "--threads",
                        threads, "--format", "json", "--out", path});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "\"seed\":4"));
    const auto text = read_file(path);
    if (first.empty()) first = text;
    CHECK(text == first);
  }
  set_thread_count(0);
  auto v = run({"verify", path});
  CHECK(v.code == kExitOk);
  CHECK(contains(v.out, "ok: true"));
  v = run({"verify", path, "--d", "4"});
  CHECK(v.code == kExitVerificationFailed);

  // a tampered distance claim is caught
  Code code = code_from_json(first);
  code.verified_min_distance = 4;
  write_file(path, code_to_json(code));
  CHECK(run({"verify", path}).code == kExitVerificationFailed);
  write_file(path, "{broken");
  CHECK(run({"verify", path}).code == kExitInvalidInput);
  std::filesystem::remove(path);
  CHECK(run({"verify", path}).code == kExitInvalidInput);
}

TEST_CASE("text output echoes the seed") {
  const auto r = run({"greedy", "--n", "9", "--k", "2", "--d", "3", "--seed", "11"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.err, "# seed=11"));
  const auto again = run({"greedy", "--n", "9", "--k", "2", "--d", "3", "--seed", "11"});
  CHECK(again.out == r.out);
}

TEST_CASE("designs compose into the known codes") {
  const auto design = temp_path("pds.json");
  const auto base = temp_path("nine.json");
  const auto out = temp_path("composed.json");
  auto r = run({"design", "pds", "--q", "8", "--out", design});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "status: design"));
  r = run({"antagonistic", "orbit", "--m", "9", "--s", "1,8", "--t", "2,3", "--out", base});
  CHECK(r.code == kExitOk);
  r = run({"compose", "--design", design, "--base", base, "--k", "2", "--d", "3", "--out", out});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "words: 657"));
  CHECK(run({"verify", out}).code == kExitOk);
  r = run({"compose", "--design", design, "--base", base, "--k", "2", "--d", "2"});
  CHECK(r.code == kExitInvalidInput);
  for (const auto& p : {design, base, out}) std::filesystem::remove(p);
}

TEST_CASE("design commands") {
  const auto path = temp_path("design.json");
  auto r = run({"design", "affine", "--p", "3", "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "blocks: 12"));
  CHECK(run({"design", "verify", path, "--expect", "design"}).code == kExitOk);
  r = run({"design", "develop", "--base", "0,1,2", "--m", "7", "--out", path});
  CHECK(r.code == kExitVerificationFailed);
  CHECK(contains(r.out, "status: invalid"));
  r = run({"design", "greedy-pack", "--v", "9", "--p", "3", "--t", "2", "--seed", "3", "--out",
           path});
  CHECK(r.code == kExitOk);
  const auto expect_design = run({"design", "verify", path, "--expect", "design"});
  const auto expect_packing = run({"design", "verify", path, "--expect", "packing"});
  CHECK(expect_packing.code == kExitOk);
  CHECK((expect_design.code == kExitOk) == contains(expect_design.out, "status: design"));
  CHECK(run({"design", "affine", "--p", "4"}).code == kExitInvalidInput);
  std::filesystem::remove(path);
}

TEST_CASE("multi-orbit and exact") {
  auto r = run({"multi-orbit", "--m", "17", "--gen", "0,7|2,6", "--gen", "0,11|7,8", "--d", "3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.err, "words: 34"));
  r = run({"multi-orbit", "--m", "17", "--gen", "0,1|2,3", "--d", "3"});
  CHECK(r.code == kExitVerificationFailed);
  r = run({"exact", "--n", "9", "--k", "2", "--d", "3", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.err, "\"optimal\":true"));
  r = run({"exact", "--n", "12", "--k", "2", "--d", "3", "--max-words", "100"});
  CHECK(r.code == kExitInvalidInput);
  r = run({"exact", "--n", "10", "--k", "2", "--d", "3", "--max-nodes", "3"});
  CHECK(r.code == kExitSearchFailed);
}

TEST_CASE("ratio csv is byte-stable") {
  const auto a = run({"ratio", "--k", "2", "--d", "3", "--n-list", "9,13", "--format", "csv"});
  const auto b = run({"ratio", "--k", "2", "--d", "3", "--n-list", "9,13", "--format", "csv",
                      "--threads", "3"});
  set_thread_count(0);
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("# seed=1\nn,greedy_size,upper_bound_floor,", 0) == 0);
}

}
