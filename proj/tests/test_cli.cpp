#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

int run(const std::string& args) {
  int rc = std::system((std::string(RBG_CLI_PATH) + " " + args).c_str());
  return WEXITSTATUS(rc);
}

std::string slurp_no_timings(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  std::string line;
  while (std::getline(in, line)) {
    auto t = line.find("\"timings\"");
    os << (t == std::string::npos ? line : line.substr(0, t)) << "\n";
  }
  return os.str();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("invariants '4 6 8 2' > /dev/null") == 0);
  CHECK(run("invariants '4 6 x 2' 2> /dev/null") == 2);          // parse
  CHECK(run("invariants '4 6 8' 2> /dev/null") == 2);            // odd DT
  CHECK(run("--limit 1 invariants '4 8 10 12 2 6' 2> /dev/null") == 3);
  CHECK(run("family abc 1 2 --r 0 2> /dev/null") == 2);          // arity
  CHECK(run("no-such-command 2> /dev/null") == 2);
}

TEST_CASE("sweep resume and warm cache keep bytes stable") {
  std::string out = "cli_test_sweep.jsonl", cache = "cli_test.cache";
  std::remove(out.c_str());
  std::remove(cache.c_str());
  std::string job = " sweep egm --m 0 1 --r -1 0 --positive-n -o " + out;
  CHECK(run("--cache " + cache + job + " > /dev/null") == 0);
  std::string cold = slurp_no_timings(out);
  CHECK(cold.find("\"schema_version\":\"rbg-sweep-v1\"") != std::string::npos);

  // resume: nothing new to write
  CHECK(run("--cache " + cache + job + " > /dev/null") == 0);
  CHECK(slurp_no_timings(out) == cold);

  // fresh run against the warm cache: identical apart from timings
  std::string out2 = "cli_test_sweep2.jsonl";
  std::remove(out2.c_str());
  std::string job2 = " sweep egm --m 0 1 --r -1 0 --positive-n -o " + out2;
  CHECK(run("--cache " + cache + job2 + " > /dev/null") == 0);
  CHECK(slurp_no_timings(out2) == cold);
}

TEST_CASE("empty parameter box") {
  std::string out = "cli_test_empty.jsonl";
  std::remove(out.c_str());
  // n = l(rl-2) with l = -1 gives n = r + 2 <= 0 for r <= -2: filtered out
  CHECK(run("sweep egm --m 0 0 --r -4 -2 --positive-n -o " + out +
            " > /dev/null") == 0);
  CHECK(slurp_no_timings(out).empty());
}
