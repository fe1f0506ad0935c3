#include "doctest.h"

#include "transit/error.hpp"
#include "transit/orbit.hpp"
#include "transit/transitivity.hpp"

#include <chrono>

using namespace transit;

namespace {

ShiftNdds autonomous(BlockCode f) { return ShiftNdds(ShiftSpace(f.alphabet()), {std::move(f)}, {{}, {0}}); }

}  // namespace

TEST_CASE("block codes apply by sliding the window") {
  auto s = BlockCode::shift(2);
  CHECK(s.window() == 2);
  CHECK(to_string(s.apply(parse_block("0110"))) == "110");
  BlockCode x(2, 2, {0, 1, 1, 0});  // y_i = x_i xor x_{i+1}
  CHECK(to_string(x.apply(parse_block("0110"))) == "101");
  CHECK(x.apply(parse_block("0")).empty());
  CHECK_THROWS_AS(BlockCode(2, 2, {0, 1, 2, 0}), Error);
  CHECK_THROWS_AS(BlockCode(2, 2, {0, 1}), Error);
}

TEST_CASE("composition and minimization") {
  auto s = BlockCode::shift(2);
  auto s2 = compose(s, s, 20);
  CHECK(s2.window() == 3);
  CHECK(to_string(s2.apply(parse_block("01101"))) == "101");
  CHECK(compose(BlockCode::identity(2), s, 20) == s);
  CHECK_THROWS_AS(compose(s2, s2, 4), Error);
  BlockCode padded(2, 2, {0, 0, 1, 1});  // ignores x_{i+1}
  CHECK(padded.minimized() == BlockCode::identity(2));
}

TEST_CASE("preimages and images of cylinders") {
  auto s = BlockCode::shift(2);
  auto u = CylinderSet::cylinder(2, parse_block("1"));
  CHECK(s.preimage(u) == CylinderSet(2, {parse_block("01"), parse_block("11")}));
  CHECK(s.image(CylinderSet::cylinder(2, parse_block("01")), 2) == CylinderSet::cylinder(2, parse_block("1")));
  CHECK(covers_everything(s, parse_block("0")));
  CHECK(!covers_everything(BlockCode::identity(2), parse_block("0")));
  CHECK(images_meet(s, parse_block("0"), parse_block("1")));
  CHECK(!images_meet(BlockCode::identity(2), parse_block("0"), parse_block("1")));
}

TEST_CASE("surjectivity and injectivity of block codes") {
  CHECK(is_surjective(BlockCode::shift(2)).is_true());
  CHECK(is_injective(BlockCode::shift(2)).is_false());
  CHECK(is_surjective(BlockCode(2, 1, {0, 0})).is_false());
  CHECK(is_injective(BlockCode(2, 1, {1, 0})).is_true());
  CHECK(is_open(BlockCode(2, 1, {1, 0})).is_true());
  CHECK(is_surjective(BlockCode(2, 2, {0, 1, 1, 0})).is_true());
}

TEST_CASE("the full shift is LEO with k = d at every depth up to 8") {
  auto t0 = std::chrono::steady_clock::now();
  auto sys = autonomous(BlockCode::shift(2));
  for (std::size_t d = 1; d <= 8; ++d) {
    SymbolicConfig cfg{d, 16};
    auto r = decide(sys, PropertyId::LEO, "i", cfg);
    CHECK(r.verdict.is_true());
    REQUIRE(r.k.has_value());
    CHECK(*r.k == d);
  }
  auto tm = decide(sys, PropertyId::TM, "i", SymbolicConfig{8, 16});
  CHECK(tm.verdict == Verdict::yes_up_to(16));
  auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(elapsed < 5.0);
}

TEST_CASE("the identity on the shift is not transitive") {
  auto sys = autonomous(BlockCode::identity(2));
  auto r = decide(sys, PropertyId::TT, "i", SymbolicConfig{4, 16});
  CHECK(r.verdict.is_false());
  CHECK(r.witness.find("U=") != std::string::npos);
  CHECK(r.witness.find("V=") != std::string::npos);
  CHECK(decide(sys, PropertyId::LEO, "i", SymbolicConfig{4, 16}).verdict.is_false());
}

TEST_CASE("symbolic hitting sets and orbits") {
  auto sys = autonomous(BlockCode::shift(2));
  auto h = hitting_set(sys, CylinderSet::cylinder(2, parse_block("00")), CylinderSet::cylinder(2, parse_block("1")), 8, 4);
  CHECK(!h.exact);
  CHECK(!h.contains(1));  // σ[00] = [0]
  CHECK(h.contains(2));
  CHECK(partial_orbit(sys, parse_block("0101"), 2, 2) == CylinderSet(2, {parse_block("10"), parse_block("01")}));
  CHECK(partial_negative_orbit(sys, parse_block("1"), 1) == CylinderSet(2, {parse_block("01"), parse_block("11")}));
}

TEST_CASE("memoized iterates stay valid while the cache grows") {
  ShiftNdds sys(ShiftSpace(2), {BlockCode::shift(2)}, {{}, {0}});
  const BlockCode& first = sys.iterate(1);
  for (std::size_t n = 2; n <= 19; ++n) (void)sys.iterate(n);
  CHECK(first == BlockCode::shift(2));
  CHECK_THROWS_AS(sys.iterate(40), Error);
}

TEST_CASE("exact traces are found for eventually periodic codes") {
  auto id = autonomous(BlockCode::identity(2));
  auto t = id.exact_trace(8);
  REQUIRE(t.has_value());
  CHECK(t->second == 1);
  CHECK(!autonomous(BlockCode::shift(2)).exact_trace(8).has_value());
}
