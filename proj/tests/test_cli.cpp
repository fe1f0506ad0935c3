#include "doctest.h"

#include "transit/commands.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace transit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "transit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string ex(const std::string& name) { return std::string(TRANSIT_EXAMPLES_DIR) + "/" + name; }

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"check", ex("z4_rotation.sys"), "--prop", "TT"}).code == 0);
  CHECK(run({"check", ex("z4_rotation.sys"), "--prop", "TM"}).code == 1);
  CHECK(run({"check", ex("binary_shift.sys"), "--prop", "TM"}).code == 0);
  CHECK(run({"check", ex("missing.sys")}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"check", ex("z4_rotation.sys"), "--prop", "nonsense"}).code == 3);
  CHECK(run({"check", ex("z4_rotation.sys"), "--prop", "TT", "--variant", "iv"}).code == 3);
  CHECK(run({"check", ex("z4_rotation.sys"), "--prop", "TT", "--variant", "iv", "--allow-imperfect"}).code != 3);
}

TEST_CASE("structured output") {
  auto r = run({"check", ex("z4_rotation.sys"), "--prop", "LEO", "--format", "structured"});
  CHECK(r.out.rfind("command: check\n", 0) == 0);
  CHECK(r.out.find("record: property=LEO variant=i verdict=False") != std::string::npos);
  CHECK(r.out.find("summary: pass=0 fail=1 unknown=0") != std::string::npos);
}

TEST_CASE("symbolic witness k") {
  auto r = run({"check", ex("binary_shift.sys"), "--prop", "LEO", "--depth", "6", "--format", "structured"});
  CHECK(r.code == 0);
  CHECK(r.out.find("k=6") != std::string::npos);
}

TEST_CASE("orbit, invariance and lattice subcommands") {
  CHECK(run({"orbit", ex("z4_rotation.sys"), "--point", "0"}).code == 0);
  CHECK(run({"orbit", ex("z4_rotation.sys"), "--point", "9"}).code == 3);
  auto inv = run({"invariance", ex("z4_rotation.sys"), "--set", "all", "--format", "structured"});
  CHECK(inv.code == 0);
  CHECK(run({"invariance", ex("z4_rotation.sys"), "--set", "evens", "--kind", "plus"}).code == 1);
  CHECK(run({"lattice", ex("period2_three_points.sys")}).code == 0);
}

TEST_CASE("gds subcommand") {
  CHECK(run({"gds", ex("z4_rotation.sys"), "--prop", "TT"}).code == 0);
  CHECK(run({"gds", ex("z4_rotation.sys"), "--prop", "VST"}).code == 3);
  CHECK(run({"gds", ex("z4_rotation.sys"), "--prop", "VST", "--family-mode", "iterate"}).code == 0);
  CHECK(run({"gds", ex("z4_rotation.sys"), "--prop", "LEO", "--family-mode", "iterate"}).code == 1);
}

TEST_CASE("parse errors print the diagnostic") {
  auto r = run({"check", ex("../../CMakeLists.txt")});
  CHECK(r.code == 3);
  CHECK(r.err.find("parse-error") != std::string::npos);
}

TEST_CASE("cross-validate is deterministic across thread counts") {
  auto a = run({"cross-validate", "--samples", "40", "--no-exhaustive", "--threads", "1", "--format", "structured"});
  auto b = run({"cross-validate", "--samples", "40", "--no-exhaustive", "--threads", "3", "--format", "structured"});
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}
