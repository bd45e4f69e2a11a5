#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "relift_cli_test";
  fs::create_directories(dir);
  return dir;
}

// Shell metacharacters in arguments are not supported; tests only pass
// plain paths and option tokens.
RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path = scratch_dir() / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string(RELIFT_BIN) + " " + args + " > " + out_path.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

fs::path write_fixture(const std::string& name, const std::string& text) {
  const fs::path p = scratch_dir() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

}  // namespace

TEST_CASE("check-lifting reports a clean audit for the span lifting") {
  const RunResult r = run_cli("check-lifting --functor P --lifting barr --bound 2");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["version"] == 1);
  CHECK(rep["command"] == "check-lifting");
  CHECK(rep["config"]["functor"] == "P");
  CHECK(rep["config"]["bound"] == 2);
  CHECK(rep["required_pass"] == true);
  CHECK(rep["all_pass"] == true);
  for (const auto& [name, cond] : rep["conditions"].items())
    CHECK(cond["verdict"] == "pass");
}

TEST_CASE("check-lifting separates required failures from optional ones in the exit code") {
  const RunResult top = run_cli("check-lifting --functor P --lifting top --bound 2");
  CHECK(top.exit_code == 0);
  const json rep = json::parse(top.out);
  CHECK(rep["required_pass"] == true);
  CHECK(rep["all_pass"] == false);
  CHECK(rep["conditions"]["diagonal-preservation"]["verdict"] == "counterexample");
  CHECK(rep["conditions"]["diagonal-preservation"]["counterexample"].contains("X"));

  // A lifting violating a required condition must flip the exit code.
  const RunResult bad = run_cli("check-lifting --functor N --lifting barr --bound 2");
  CHECK(bad.exit_code == 1);
  CHECK(json::parse(bad.out)["required_pass"] == false);
}

TEST_CASE("check-law mirrors the lifting audit through the transpose") {
  const RunResult r = run_cli("check-law --functor P --lifting barr --bound 2");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["command"] == "check-law");
  CHECK(rep["config"]["law"] == "law(barr)");
  CHECK(rep["conditions"]["lax-extensionality"]["verdict"] == "pass");
  CHECK(rep["conditions"]["symmetry"]["verdict"] == "pass");
}

TEST_CASE("convert tabulates components and verifies both round trips") {
  const RunResult r = run_cli("convert --functor N --lifting LJ:6 --bound 1 --roundtrip");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["law"] == "law(LJ:6)");
  CHECK(rep["roundtrip"]["lifting-identity"] == "pass");
  CHECK(rep["roundtrip"]["law-identity"] == "pass");
  CHECK(rep["roundtrip"]["instances_checked"] == 29);

  const RunResult back =
      run_cli("convert --functor P --lifting barr --bound 1 --direction to-lifting");
  CHECK(back.exit_code == 0);
  CHECK(json::parse(back.out)["lifting"] == "lift(law(barr))");
}

TEST_CASE("convert omits oversized tables but still round-trips them") {
  const RunResult r = run_cli("convert --functor N --lifting LJ:9 --bound 2");
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  bool saw_omitted = false;
  bool saw_entries = false;
  for (const auto& c : rep["components"]) {
    if (c.contains("omitted")) saw_omitted = true;
    if (c.contains("entries")) saw_entries = true;
  }
  CHECK(saw_omitted);
  CHECK(saw_entries);
}

TEST_CASE("bisim relates chain states across two documents") {
  const fs::path m1 = write_fixture(
      "chain.json", R"({"functor":"P","states":["s","t"],"structure":{"s":["t"],"t":[]}})");
  const fs::path m2 = write_fixture(
      "split.json",
      R"({"functor":"P","states":["u","v","w"],"structure":{"u":["v"],"v":[],"w":["w"]}})");
  const RunResult r =
      run_cli("bisim --model " + m1.string() + " --model " + m2.string());
  CHECK(r.exit_code == 0);
  const json rep = json::parse(r.out);
  CHECK(rep["pair_count"] == 2);
  CHECK(rep["is_bisimulation"] == true);
  const json expected = json::array({json::array({"s", "u"}), json::array({"t", "v"})});
  CHECK(rep["pairs"] == expected);

  const RunResult self = run_cli("bisim --model " + m1.string());
  const json srep = json::parse(self.out);
  CHECK(srep["pairs"] == json::array({json::array({"s", "s"}), json::array({"t", "t"})}));
}

TEST_CASE("bisim validates the functor claim against the documents") {
  const fs::path m1 = write_fixture(
      "chain2.json", R"({"functor":"P","states":["s","t"],"structure":{"s":["t"],"t":[]}})");
  CHECK(run_cli("bisim --functor N --model " + m1.string()).exit_code == 2);
  CHECK(run_cli("bisim --functor P --model " + m1.string()).exit_code == 0);
  CHECK(run_cli("bisim").exit_code == 2);
}

TEST_CASE("verify-theorems exit code tracks the suite verdicts") {
  const RunResult ok = run_cli("verify-theorems --suite transport");
  CHECK(ok.exit_code == 0);
  const json okrep = json::parse(ok.out);
  CHECK(okrep["all_pass"] == true);
  CHECK(okrep["suites"][0]["suite"] == "transport");
  CHECK(okrep["suites"][0]["bound"] == 2);

  const RunResult red = run_cli("verify-theorems --suite lj-classification");
  CHECK(red.exit_code == 1);
  const json redrep = json::parse(red.out);
  CHECK(redrep["all_pass"] == false);
  std::vector<std::string> failing;
  for (const auto& p : redrep["suites"][0]["properties"])
    if (p["verdict"] != "pass") failing.push_back(p["name"]);
  CHECK(failing == std::vector<std::string>{"two-pair-exchange-source-side"});
}

TEST_CASE("verify-theorems reports are byte-identical across runs") {
  const RunResult a = run_cli("verify-theorems --suite barr-minimal");
  const RunResult b = run_cli("verify-theorems --suite barr-minimal");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("oracle-compare agrees with the partition oracle on seeded models") {
  const RunResult a = run_cli("oracle-compare --seed 1729");
  CHECK(a.exit_code == 0);
  const json rep = json::parse(a.out);
  CHECK(rep["instances_checked"] == 50);
  CHECK(rep["mismatches"] == 0);
  CHECK(!rep.contains("first_mismatch"));

  const RunResult b = run_cli("oracle-compare --seed 1729");
  CHECK(a.out == b.out);
  const RunResult c = run_cli("oracle-compare --seed 7");
  CHECK(c.exit_code == 0);
  CHECK(c.out != a.out);
}

TEST_CASE("oracle-compare accepts explicit powerset models only") {
  const fs::path m1 = write_fixture(
      "chain3.json", R"({"functor":"P","states":["s","t"],"structure":{"s":["t"],"t":[]}})");
  const fs::path nm = write_fixture(
      "nbhd.json", R"({"functor":"N","states":["x"],"structure":{"x":[[]]}})");
  const RunResult ok = run_cli("oracle-compare --model " + m1.string());
  CHECK(ok.exit_code == 0);
  CHECK(json::parse(ok.out)["instances_checked"] == 1);
  CHECK(run_cli("oracle-compare --model " + nm.string()).exit_code == 2);
  CHECK(run_cli("oracle-compare --functor N").exit_code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("check-lifting --functor Q").exit_code == 2);
  CHECK(run_cli("verify-theorems --suite nosuch").exit_code == 2);
  CHECK(run_cli("bisim --model /nonexistent/model.json").exit_code == 2);
  CHECK(run_cli("check-lifting --lifting \"meet(\"").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("--out writes the same bytes the stdout path would print") {
  const fs::path p = scratch_dir() / "report.json";
  const RunResult direct = run_cli("check-lifting --functor P --lifting barr --bound 1");
  const RunResult filed =
      run_cli("check-lifting --functor P --lifting barr --bound 1 --out " + p.string());
  CHECK(filed.exit_code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == direct.out);
}
