#include "doctest.h"

#include "oracle.hpp"
#include "transit/error.hpp"
#include "transit/harness.hpp"
#include "transit/invariance.hpp"

using namespace transit;

namespace {

bool naive(const Ndds& sys, const PointSet& a, InvarianceKind k) {
  const auto n = sys.size();
  auto g = oracle::iterates(sys, oracle::bound(sys));
  std::vector<std::vector<Point>> used;
  for (auto i : sys.used()) used.push_back(sys.family()[i].table());
  auto img = [&](const std::vector<Point>& f) {
    PointSet r(n);
    a.for_each([&](Point x) { r.insert(f[x]); });
    return r;
  };
  auto pre = [&](const std::vector<Point>& f) {
    PointSet r(n);
    for (Point x = 0; x < n; ++x)
      if (a.contains(f[x])) r.insert(x);
    return r;
  };
  auto all = [](const auto& maps, auto pred) {
    for (const auto& f : maps)
      if (!pred(f)) return false;
    return true;
  };
  switch (k) {
    case InvarianceKind::PlusInv: return all(g, [&](auto& f) { return img(f).subset_of(a); });
    case InvarianceKind::StrongPlusInv: return all(used, [&](auto& f) { return img(f).subset_of(a); });
    case InvarianceKind::MinusInv: return all(g, [&](auto& f) { return pre(f).subset_of(a); });
    case InvarianceKind::StrongMinusInv: return all(used, [&](auto& f) { return pre(f).subset_of(a); });
    case InvarianceKind::WeaklyMinusInv: return all(g, [&](auto& f) { return a.subset_of(img(f)); });
    case InvarianceKind::ExtendedMinusInv: return all(used, [&](auto& f) { return a.subset_of(img(f)); });
    case InvarianceKind::Invariant: return all(g, [&](auto& f) { return img(f) == a; });
  }
  return false;
}

}  // namespace

TEST_CASE("invariance kinds parse") {
  CHECK(parse_invariance("strong-plus") == InvarianceKind::StrongPlusInv);
  for (auto k : kAllInvariance) CHECK(parse_invariance(to_string(k)) == k);
  CHECK_THROWS_AS(parse_invariance("sideways"), Error);
}

TEST_CASE("Z4 rotation: only the empty set and X are invariant") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  CHECK(check_invariance(sys, PointSet(4, {0, 2}), InvarianceKind::PlusInv).is_false());
  CHECK(check_invariance(sys, PointSet::full(4), InvarianceKind::Invariant).is_true());
  // The square of the rotation keeps the evens.
  auto sq = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 2));
  CHECK(check_invariance(sq, PointSet(4, {0, 2}), InvarianceKind::Invariant).is_true());
}

TEST_CASE("invariance checks agree with the definitions") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    auto sys = random_ndds(rng, {1, 4, 3, 2, 3});
    for (const auto& a : oracle::subsets(sys.size(), true))
      for (auto k : kAllInvariance) REQUIRE(check_invariance(sys, a, k).is_true() == naive(sys, a, k));
  }
}

TEST_CASE("duality and the characterizations hold on the exhaustive corpus") {
  for (const auto& sys : exhaustive_corpus(3, 2, 1, 2)) {
    for (const auto& a : oracle::subsets(sys.size(), true)) {
      auto r = invariance_laws(sys, a);
      REQUIRE_MESSAGE(r.all_pass(), describe(sys), " A=", a.to_string(), "\n", r.table());
      auto [w, wc] = weakly_minus_inv_characterization(sys, a);
      CHECK(w == wc);
      auto [e, ec] = extended_minus_inv_characterization(sys, a);
      CHECK(e == ec);
    }
  }
}

TEST_CASE("surjective-family lemmas") {
  for (const auto& sys : exhaustive_corpus(3, 2, 1, 2)) {
    if (!sys.all_surjective()) {
      CHECK_THROWS_AS(lemma5_suite(sys, sys.whole()), Error);
      continue;
    }
    for (const auto& a : oracle::subsets(sys.size(), true)) {
      REQUIRE(lemma5_suite(sys, a).all_pass());
      REQUIRE(lemma6_suite(sys, a).all_pass());
    }
  }
}

TEST_CASE("symbolic invariance") {
  ShiftNdds shift(ShiftSpace(2), {BlockCode::shift(2)}, {{}, {0}});
  auto zeros = CylinderSet::cylinder(2, parse_block("0"));
  // σ^{-1}[0] = [x0] is not inside [0].
  CHECK(check_invariance(shift, zeros, InvarianceKind::StrongMinusInv, 8).is_false());
  CHECK(check_invariance(shift, CylinderSet::full(2), InvarianceKind::Invariant, 8).is_true());
  ShiftNdds id(ShiftSpace(2), {BlockCode::identity(2)}, {{}, {0}});
  CHECK(check_invariance(id, zeros, InvarianceKind::StrongPlusInv, 8).is_true());
}
