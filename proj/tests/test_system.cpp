#include "doctest.h"

#include "oracle.hpp"
#include "transit/error.hpp"
#include "transit/harness.hpp"
#include "transit/system.hpp"

using namespace transit;

TEST_CASE("finite maps") {
  auto r = FiniteMap::rotation(4, 1);
  CHECK(r.table() == std::vector<Point>{1, 2, 3, 0});
  CHECK(r.is_surjective());
  CHECK(!FiniteMap::constant(3, 1).is_surjective());
  CHECK(compose(r, r) == FiniteMap::rotation(4, 2));
  CHECK(compose(FiniteMap({1, 1, 0}), FiniteMap({2, 0, 0})).table() == std::vector<Point>{0, 1, 1});
  CHECK(r.image(PointSet(4, {0, 3})) == PointSet(4, {0, 1}));
  CHECK(FiniteMap({0, 0, 2}).preimage(PointSet(3, {0})) == PointSet(3, {0, 1}));
  CHECK(r.to_string() == "[1,2,3,0]");
  CHECK_THROWS_AS(FiniteMap({0, 3, 1}), Error);
  CHECK(is_open(r).is_true());
  CHECK(is_injective(FiniteMap({0, 0})).is_false());
}

TEST_CASE("sequence spec") {
  SequenceSpec s{{2, 0}, {1, 0, 1}};
  CHECK(s.index_at(1) == 2);
  CHECK(s.index_at(2) == 0);
  CHECK(s.index_at(3) == 1);
  CHECK(s.index_at(5) == 1);
  CHECK(s.index_at(6) == 1);
  CHECK(s.used_indices() == std::vector<std::size_t>{0, 1, 2});
  CHECK(s.recurring_indices() == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(s.index_at(0), Error);
  CHECK_THROWS_AS(s.validate(2), Error);
  CHECK_THROWS_AS((SequenceSpec{{}, {}}).validate(1), Error);
}

TEST_CASE("rotation trace on Z4") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  const auto& t = sys.trace();
  CHECK(t.preperiod() == 0);
  CHECK(t.cycle() == 4);
  CHECK(sys.iterate(4) == FiniteMap::identity(4));
  CHECK(sys.iterate(7) == FiniteMap::rotation(4, 3));
}

TEST_CASE("trace of an eventually constant system") {
  // f_1 = rotation, then the constant map forever: g_n = const for n >= 2.
  Ndds sys(FiniteSpace::discrete(3), {FiniteMap::rotation(3, 1), FiniteMap::constant(3, 0)}, {{0}, {1}});
  CHECK(sys.trace().preperiod() == 1);
  CHECK(sys.trace().cycle() == 1);
  CHECK(sys.iterate(1) == FiniteMap::rotation(3, 1));
  CHECK(sys.iterate(9) == FiniteMap::constant(3, 0));
}

TEST_CASE("trace agrees with naive iteration") {
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    auto sys = random_ndds(rng, {1, 4, 3, 3, 3});
    const auto B = oracle::bound(sys);
    auto g = oracle::iterates(sys, B);
    for (std::size_t n = 1; n <= B; ++n) REQUIRE(sys.iterate(n).table() == g[n - 1]);
    // Minimal: the preperiod cannot shrink and the cycle is the least period.
    const auto s = sys.trace().preperiod(), p = sys.trace().cycle();
    if (s > 0) CHECK(g[s - 1] != g[s - 1 + p]);
    for (std::size_t q = 1; q < p; ++q) {
      bool periodic = true;
      for (std::size_t n = s + 1; n <= s + 2 * p; ++n) periodic = periodic && g[n - 1] == g[n - 1 + q];
      CHECK(!periodic);
    }
  }
}

TEST_CASE("word maps and shifts") {
  Ndds sys(FiniteSpace::discrete(3), {FiniteMap({1, 2, 0}), FiniteMap({0, 0, 1})}, {{}, {0, 1}});
  // f_(1,2) = f_2 ∘ f_1
  CHECK(sys.word_map(Word{{1, 2}}) == compose(sys.map_at(2), sys.map_at(1)));
  CHECK(sys.word_map(Word{{2, 1}}, WordMode::Family) == compose(sys.family()[0], sys.family()[1]));
  CHECK_THROWS_AS(sys.word_map(Word{{0}}), Error);
  auto sh = sys.shifted(1);
  CHECK(sh.map_at(1) == sys.map_at(2));
  CHECK(sh.iterate(3) == compose(sys.map_at(4), compose(sys.map_at(3), sys.map_at(2))));
  CHECK(sys.first_position(1) == 2);
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(Ndds(FiniteSpace::discrete(2), {FiniteMap({0, 1, 2})}, {{}, {0}}), Error);
  CHECK_THROWS_AS(Ndds(FiniteSpace::discrete(2), {FiniteMap({0, 1})}, {{}, {1}}), Error);
}
