#include "doctest.h"

#include "transit/error.hpp"
#include "transit/space.hpp"

using namespace transit;

namespace {
Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
}  // namespace

TEST_CASE("point set algebra") {
  PointSet a(5, {0, 2, 4}), b(5, {1, 2});
  CHECK((a | b) == PointSet(5, {0, 1, 2, 4}));
  CHECK((a & b) == PointSet(5, {2}));
  CHECK((a - b) == PointSet(5, {0, 4}));
  CHECK(a.complement() == PointSet(5, {1, 3}));
  CHECK(a.intersects(b));
  CHECK(PointSet(5, {2}).subset_of(a));
  CHECK(a.to_string() == "{0,2,4}");
  CHECK(PointSet::from_mask(4, 0b1010) == PointSet(4, {1, 3}));
  CHECK(PointSet::full(3).is_full());
  CHECK(PointSet(3).empty());
  CHECK(PointSet(3, {0}) < PointSet(3, {1}));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/2") == q(3, 2));
  CHECK(parse_rational("-2") == q(-2));
  CHECK(to_string(q(6, 4)) == "3/2");
  CHECK_THROWS_AS(parse_rational("1.5"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("metric validation") {
  CHECK_NOTHROW(FiniteSpace({{q(0), q(1)}, {q(1), q(0)}}));
  try {
    FiniteSpace({{q(0), q(1), q(5)}, {q(1), q(0), q(1)}, {q(5), q(1), q(0)}});
    FAIL("triangle violation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MetricViolation);
  }
  CHECK_THROWS_AS(FiniteSpace({{q(0), q(1)}, {q(2), q(0)}}), Error);  // asymmetric
  CHECK_THROWS_AS(FiniteSpace({{q(0), q(0)}, {q(0), q(0)}}), Error);  // zero off diagonal
  CHECK_THROWS_AS(FiniteSpace({{q(1)}}), Error);                      // nonzero diagonal
}

TEST_CASE("cyclic metric and balls") {
  auto z4 = FiniteSpace::cyclic(4);
  CHECK(z4.distance(0, 3) == q(1));
  CHECK(z4.distance(0, 2) == q(2));
  CHECK(z4.diameter() == q(2));
  CHECK(ball(z4, 0, Epsilon(q(1))) == PointSet(4, {0}));
  CHECK(ball(z4, 0, Epsilon(q(3, 2))) == PointSet(4, {0, 1, 3}));
  CHECK(ball(z4, 0, Epsilon(q(3))).is_full());
  CHECK_THROWS_AS(Epsilon(q(0)), Error);
  CHECK_THROWS_AS(Epsilon(q(-1, 2)), Error);
}

TEST_CASE("eps-density against direct ball checks") {
  auto z5 = FiniteSpace::cyclic(5);
  for (std::uint64_t m = 1; m < 32; ++m) {
    auto s = PointSet::from_mask(5, m);
    for (const auto& e : z5.epsilon_grid()) {
      bool direct = true;
      for (Point c = 0; c < 5; ++c) direct = direct && ball(z5, c, Epsilon(e)).intersects(s);
      CHECK(is_eps_dense(z5, s, Epsilon(e)) == direct);
    }
    CHECK(is_dense(z5, s) == s.is_full());
  }
}

TEST_CASE("epsilon grid covers every step") {
  // Density at an arbitrary radius equals density at some grid radius with
  // the same ball structure.
  auto sp = FiniteSpace({{q(0), q(1), q(3)}, {q(1), q(0), q(2)}, {q(3), q(2), q(0)}});
  auto grid = sp.epsilon_grid();
  for (std::int64_t num = 1; num <= 16; ++num) {
    Epsilon e(q(num, 4));
    for (std::uint64_t m = 1; m < 8; ++m) {
      auto s = PointSet::from_mask(3, m);
      bool some = false;
      for (const auto& g : grid) {
        bool same = true;
        for (Point c = 0; c < 3; ++c) same = same && ball(sp, c, Epsilon(g)) == ball(sp, c, e);
        if (same) some = some || (is_eps_dense(sp, s, Epsilon(g)) == is_eps_dense(sp, s, e));
      }
      CHECK(some);
    }
  }
}

TEST_CASE("discrete closure and interior") {
  auto sp = FiniteSpace::discrete(4);
  PointSet s(4, {1, 2});
  auto [cl, in] = closure_interior(sp, s);
  CHECK(cl == s);
  CHECK(in == s);
}

TEST_CASE("max product metric") {
  auto p = FiniteSpace::max_product(FiniteSpace::cyclic(3), FiniteSpace::discrete(2));
  CHECK(p.size() == 6);
  CHECK(p.distance(0, 1) == q(1));  // (0,0)-(0,1)
  CHECK(p.distance(0, 2) == q(1));  // (0,0)-(1,0)
}

TEST_CASE("cylinder sets are canonical") {
  auto a = CylinderSet(2, {parse_block("0"), parse_block("10"), parse_block("11")});
  CHECK(a.is_full());
  auto b = CylinderSet(2, {parse_block("01"), parse_block("0")});
  CHECK(b == CylinderSet::cylinder(2, parse_block("0")));
  CHECK(b.complement() == CylinderSet::cylinder(2, parse_block("1")));
  CHECK((b & b.complement()).empty());
  CHECK((b | b.complement()).is_full());
  CHECK(CylinderSet::cylinder(2, parse_block("01")).subset_of(b));
  CHECK(b.meets(parse_block("011")));
  CHECK(!b.meets(parse_block("1")));
  CHECK(b.contains_cylinder(parse_block("00")));
  CHECK(CylinderSet::empty(2).to_string() == "empty");
  CHECK(CylinderSet::full(2).to_string() == "X");
}

TEST_CASE("cylinder set algebra matches leaf bitmaps") {
  const std::size_t d = 4;
  for (std::size_t m1 = 0; m1 < 256; m1 += 7) {
    boost::dynamic_bitset<> l1(16, m1 * 211 % 65536), l2(16, m1 * 97 % 65536);
    auto a = CylinderSet::from_leaves(2, d, l1), b = CylinderSet::from_leaves(2, d, l2);
    CHECK(a.leaves(d) == l1);
    CHECK((a | b).leaves(d) == (l1 | l2));
    CHECK((a & b).leaves(d) == (l1 & l2));
    CHECK(a.complement().leaves(d) == ~l1);
    CHECK(a.intersects(b) == l1.intersects(l2));
  }
}

TEST_CASE("shift balls are cylinders") {
  ShiftSpace s(2);
  CHECK(cylinder_depth(Epsilon(q(1, 4))) == 2);
  // d takes values 2^-m only, so radius 1/3 gives the same ball as 1/2.
  CHECK(cylinder_depth(Epsilon(q(1, 3))) == 1);
  CHECK(cylinder_depth(Epsilon(q(1, 2))) == 1);
  CHECK(cylinder_depth(Epsilon(q(2))) == 0);
  CHECK(ball(s, parse_block("0110"), Epsilon(q(1, 4))) == CylinderSet::cylinder(2, parse_block("01")));
  CHECK(ShiftSpace::distance_for_agreement(2) == q(1, 8));
  CHECK_THROWS_AS(ShiftSpace(1), Error);
  CHECK_THROWS_AS(ShiftSpace(11), Error);
  CHECK(!is_dense(s, CylinderSet::cylinder(2, parse_block("0"))));
  CHECK(is_eps_dense(s, CylinderSet(2, {parse_block("00"), parse_block("10")}), Epsilon(q(1, 2))));
}
