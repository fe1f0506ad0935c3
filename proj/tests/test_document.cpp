#include "doctest.h"

#include "fuzz.hpp"
#include "transit/document.hpp"
#include "transit/harness.hpp"
#include "transit/transitivity.hpp"

#include <fstream>
#include <regex>
#include <sstream>

using namespace transit;

namespace {

std::string read(const std::string& name) {
  std::ifstream in(std::string(TRANSIT_EXAMPLES_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kMinimal = R"(SPACE
backend finite
points 2
FAMILY
map 1 0
SEQUENCE
period 0
)";

DocumentError error_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const DocumentError& e) {
    return e;
  }
  FAIL("document accepted: ", text);
  return DocumentError(ErrorCode::ParseError, 0, 0, "");
}

}  // namespace

TEST_CASE("minimal document") {
  auto doc = parse_document(kMinimal);
  CHECK(doc.backend == SystemDocument::Backend::Finite);
  CHECK(doc.points == 2);
  CHECK(doc.metric == SystemDocument::Metric::Discrete);
  auto sys = doc.ndds();
  CHECK(sys.family().size() == 1);
  CHECK(sys.sequence().prefix.empty());
  CHECK(decide(sys, PropertyId::TT).verdict.is_true());
  CHECK_THROWS_AS(doc.shift_ndds(), Error);
}

TEST_CASE("shipped examples parse and round-trip") {
  for (const char* name : {"z4_rotation.sys", "period2_three_points.sys", "binary_shift.sys"}) {
    auto doc = parse_document(read(name));
    auto again = parse_document(serialize(doc));
    CHECK(again == doc);
    CHECK(serialize(again) == serialize(doc));
  }
  auto z4 = parse_document(read("z4_rotation.sys"));
  CHECK(z4.point_set("evens") == PointSet(4, {0, 2}));
  CHECK_THROWS_AS(z4.point_set("odds"), Error);
  auto shift = parse_document(read("binary_shift.sys"));
  CHECK(shift.shift_ndds().family().front() == BlockCode::shift(2));
  CHECK(shift.cylinder_set("V") == CylinderSet::cylinder(2, parse_block("1")));
}

TEST_CASE("triangle violation is reported at the row") {
  auto e = error_of(R"(SPACE
backend finite
points 3
metric rows
row 0 1 5
row 1 0 1
row 5 1 0
FAMILY
map 0 1 2
SEQUENCE
period 0
)");
  CHECK(e.code() == ErrorCode::MetricViolation);
  CHECK(e.line() >= 5);
  CHECK(e.line() <= 7);
  CHECK(e.diagnostic().find("metric-violation") != std::string::npos);
}

TEST_CASE("diagnostics carry line and column") {
  auto e = error_of("SPACE\nbackend finite\npoints 2\nFAMILY\nmap 0 7\nSEQUENCE\nperiod 0\n");
  CHECK(e.code() == ErrorCode::InvalidMap);
  CHECK(e.line() == 5);
  CHECK(e.column() == 7);
  CHECK(std::regex_match(e.diagnostic(), std::regex(R"(\d+:\d+: [a-z-]+: .+)")));

  auto s = error_of("SPACE\nbackend finite\npoints 2\nFAMILY\nmap 0 1\nSEQUENCE\nprefix 3\nperiod 0\n");
  CHECK(s.code() == ErrorCode::InvalidSequence);
  CHECK(s.line() == 7);
  CHECK(s.column() == 8);

  CHECK(error_of("SPACE\nbackend finite\nbackend finite\n").code() == ErrorCode::ParseError);
  CHECK(error_of("SPACE\npoints two\n").code() == ErrorCode::ParseError);
  CHECK(error_of("").code() == ErrorCode::ParseError);
  CHECK(error_of(std::string(kMinimal) + "SETS\nset A 0\nset A 1\n").code() == ErrorCode::ParseError);
  CHECK(error_of(std::string(kMinimal) + "SETS\nset A 4\n").code() != ErrorCode::MetricViolation);
}

TEST_CASE("documents built from systems") {
  Rng rng(4);
  for (int i = 0; i < 100; ++i) {
    auto sys = random_ndds(rng);
    auto doc = to_document(sys);
    auto back = parse_document(serialize(doc)).ndds();
    CHECK(back.family() == sys.family());
    CHECK(back.sequence() == sys.sequence());
    CHECK(back.space() == sys.space());
  }
}

TEST_CASE("targeted mutations are rejected with structured diagnostics") {
  std::mt19937_64 rng(10);
  const std::string docs[] = {read("z4_rotation.sys"), read("period2_three_points.sys"), read("binary_shift.sys")};
  const std::regex shape(R"(\d+:\d+: [a-z-]+: .+)");
  for (unsigned i = 0; i < 120; ++i) {
    auto m = fuzz::mutate(docs[i % 3], i % 6, rng);
    bool rejected = false;
    try {
      parse_document(m);
    } catch (const DocumentError& e) {
      rejected = std::regex_match(e.diagnostic(), shape) && e.line() >= 1;
    }
    CHECK_MESSAGE(rejected, "op ", i % 6, "\n", m);
  }
}

TEST_CASE("byte-level damage never escapes as anything but DocumentError") {
  std::mt19937_64 rng(12);
  const std::string docs[] = {read("z4_rotation.sys"), read("period2_three_points.sys"), read("binary_shift.sys")};
  std::size_t accepted = 0;
  for (unsigned i = 0; i < 3000; ++i) {
    auto m = fuzz::byte_flip(docs[i % 3], rng);
    try {
      auto doc = parse_document(m);
      ++accepted;
      // Whatever parses must serialize to an equivalent document.
      CHECK(parse_document(serialize(doc)) == doc);
    } catch (const DocumentError&) {
    }
  }
  CHECK(accepted > 0);
}
