#include "doctest.h"

#include "oracle.hpp"
#include "transit/harness.hpp"
#include "transit/orbit.hpp"

using namespace transit;

TEST_CASE("orbits of the Z4 rotation") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  auto o = orbit(sys, 0);
  CHECK(o.points.is_full());
  CHECK(o.closed);
  CHECK(partial_orbit(sys, 0, 2) == PointSet(4, {1, 2}));
  CHECK(negative_orbit(sys, 0).points.is_full());
  CHECK(partial_negative_orbit(sys, 0, 1) == PointSet(4, {3}));
  CHECK(omega_limit(sys, 2).points.is_full());
  CHECK(is_recurrent(sys, 3).is_true());
}

TEST_CASE("a point is in its own orbit only when revisited") {
  Ndds sys(FiniteSpace::discrete(3), {FiniteMap({1, 2, 2})}, {{}, {0}});
  CHECK(orbit(sys, 0).points == PointSet(3, {1, 2}));
  CHECK(omega_limit(sys, 0).points == PointSet(3, {2}));
  CHECK(is_recurrent(sys, 0).is_false());
  CHECK(is_recurrent(sys, 2).is_true());
}

TEST_CASE("extended orbits follow every used map") {
  // f_n alternates a and b; J(x) sees compositions in any order.
  FiniteMap a({1, 1, 2, 3}), b({2, 2, 3, 3});
  Ndds sys(FiniteSpace::discrete(4), {a, b}, {{}, {0, 1}});
  CHECK(extended_orbit(sys, 0).points == PointSet(4, {1, 2, 3}));
  CHECK(extended_negative_orbit(sys, 3).points == PointSet(4, {0, 1, 2, 3}));
  CHECK(extended_omega_limit(sys, 0).points == PointSet(4, {1, 2, 3}));
}

TEST_CASE("orbit sets match naive iteration") {
  Rng rng(5);
  for (int i = 0; i < 300; ++i) {
    auto sys = random_ndds(rng, {1, 5, 3, 2, 3});
    const auto B = oracle::bound(sys);
    auto g = oracle::iterates(sys, B);
    for (Point x = 0; x < sys.size(); ++x) {
      PointSet fwd(sys.size()), back(sys.size()), inf(sys.size());
      for (std::size_t k = 0; k < B; ++k) {
        fwd.insert(g[k][x]);
        if (k >= B / 2) inf.insert(g[k][x]);
        for (Point y = 0; y < sys.size(); ++y)
          if (g[k][y] == x) back.insert(y);
      }
      CHECK(orbit(sys, x).points == fwd);
      CHECK(negative_orbit(sys, x).points == back);
      CHECK(omega_limit(sys, x).points == inf);
      auto single = PointSet::singleton(sys.size(), x);
      CHECK(forward_union(sys, single) == fwd);
      CHECK(backward_union(sys, single) == back);
      auto reach = oracle::word_reach(sys, std::uint64_t{1} << x);
      CHECK(extended_orbit(sys, x).points == PointSet::from_mask(sys.size(), reach));
    }
  }
}
