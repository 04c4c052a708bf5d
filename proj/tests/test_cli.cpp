#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stdout captured; stderr is discarded.
Run run(const std::string& args) {
  auto out = fs::temp_directory_path() / "rmb_test_cli.out";
  std::string cmd = std::string(RMBOUND_PATH) + " " + args + " >" + out.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  fs::remove(out);
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = fs::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("malformed input exits with 2") {
  auto bad = write_temp("rmb_bad.pd", "components: [1,6]\nX(1,4,2,5)\nX(3,6,4\n");
  CHECK(run("validate --diagram " + bad).code == 2);
  auto dup = write_temp("rmb_dup.pd", "components: [1,6]\nX(1,4,2,5)\nX(3,6,4,1)\nX(5,2,6,1)\n");
  CHECK(run("validate --diagram " + dup).code == 2);
  CHECK(run("invariant --which bogus --fixture 3_1").code == 2);
  CHECK(run("no-such-command").code == 2);
}

TEST_CASE("iu of a crossing-free diagram is 0") {
  auto free = write_temp("rmb_free.json", R"({"crossings": [], "components": [], "free_loops": 1})");
  auto r = run("invariant --which iu --diagram " + free);
  CHECK(r.code == 0);
  CHECK(r.out == "0\n");
  auto j = run("invariant --which iu --json --diagram " + free);
  CHECK(j.code == 0);
  CHECK(j.out.find("\"value\":\"0\"") != std::string::npos);
}

TEST_CASE("fixture verification") {
  auto r = run("verify-paper --fixture U");
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run("verify-fixtures --fixture example --fixture oracle").code == 0);
}

TEST_CASE("identify, unknotting and bound") {
  auto r = run("identify --fixture F");
  CHECK(r.code == 0);
  CHECK(r.out.find("9_2") != std::string::npos);
  auto u = run("unknotting --fixture 10_2 --json");
  CHECK(u.code == 0);
  CHECK(u.out.find("\"lo\":3") != std::string::npos);
  auto s = write_temp("rmb_minus.txt", "-1\n");
  // T defaults to (+1); iu_(-1) of U with eps = delta = +1 is 13.
  auto b = run("bound --fixture U --S " + s + " --eps 1 --delta 1");
  CHECK(b.code == 0);
  CHECK(b.out.rfind("7 ", 0) == 0);
}
