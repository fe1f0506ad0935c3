#include "doctest.h"

#include "oracle.hpp"
#include "transit/error.hpp"
#include "transit/gds.hpp"
#include "transit/harness.hpp"

using namespace transit;

namespace {

GdsFamily z4_plus_one() { return GdsFamily::explicit_family(FiniteSpace::cyclic(4), {FiniteMap::rotation(4, 1)}); }

}  // namespace

TEST_CASE("families") {
  auto f = GdsFamily::explicit_family(FiniteSpace::discrete(3), {FiniteMap({1, 2, 0}), FiniteMap({1, 2, 0})});
  CHECK(f.members().size() == 1);
  CHECK(!f.is_semigroup());
  CHECK(f.all_surjective());
  CHECK_THROWS_AS(GdsFamily::explicit_family(FiniteSpace::discrete(3), {}), Error);
  CHECK_THROWS_AS(GdsFamily::explicit_family(FiniteSpace::discrete(3), {FiniteMap({0, 1})}), Error);
  CHECK_THROWS_AS(f.source(), Error);
}

TEST_CASE("closure of the rotation generates the cyclic group") {
  auto c = semigroup_closure(z4_plus_one());
  CHECK(c.members().size() == 4);
  CHECK(c.is_semigroup());
  CHECK(closure_suite(z4_plus_one()).all_pass());
  CHECK_THROWS_AS(semigroup_closure(z4_plus_one(), 2), Error);
}

TEST_CASE("images, preimages and orbits") {
  auto f = GdsFamily::explicit_family(FiniteSpace::discrete(4), {FiniteMap({1, 1, 3, 3}), FiniteMap({0, 0, 2, 2})});
  CHECK(family_image(f, PointSet(4, {0})) == PointSet(4, {0, 1}));
  CHECK(family_preimage(f, PointSet(4, {3})) == PointSet(4, {2, 3}));
  CHECK(gds_orbit(f, 0).points == PointSet(4, {0, 1}));
  CHECK(gds_negative_orbit(f, 2).points == PointSet(4, {2, 3}));
  CHECK(gds_omega(f, 0) == PointSet(4, {0, 1}));
  CHECK(gds_transitive_points(f).empty());
  CHECK(gds_transitive_points(z4_plus_one()).is_full());
}

TEST_CASE("explicit families refuse the compactness-based properties") {
  for (auto p : {GdsProperty::VST, GdsProperty::TM, GdsProperty::LEO})
    CHECK_THROWS_AS(gds_decide(z4_plus_one(), p), Error);
  CHECK(gds_decide(z4_plus_one(), GdsProperty::VST, GdsOptions{true}).verdict.is_false());
  CHECK(gds_decide(z4_plus_one(), GdsProperty::TT).verdict.is_true());
  CHECK(gds_decide(z4_plus_one(), GdsProperty::ST).verdict.is_true());
  CHECK(gds_decide(z4_plus_one(), GdsProperty::Minimal).verdict.is_true());
}

TEST_CASE("iterate family of the Z4 rotation") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  auto f = GdsFamily::iterate_family(sys);
  CHECK(f.members().size() == 4);
  CHECK(gds_decide(f, GdsProperty::TT).verdict.is_true());
  CHECK(gds_decide(f, GdsProperty::VST).verdict.is_true());
  CHECK(gds_decide(f, GdsProperty::TM).verdict.is_false());
  CHECK(gds_decide(f, GdsProperty::LEO).verdict.is_false());
}

TEST_CASE("property names") {
  for (auto p : kAllGdsProperties) CHECK(parse_gds_property(to_string(p)) == p);
  CHECK_THROWS_AS(parse_gds_property("mixing-ish"), Error);
}

TEST_CASE("equations and f-transitive sets on random triples") {
  Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    auto f = random_gds_family(rng, 5, 3);
    auto a = random_subset(rng, f.size()), b = random_subset(rng, f.size());
    auto r = gds_equation_checks(f, a, b, static_cast<Point>(i % f.size()));
    REQUIRE_MESSAGE(r.all_pass(), describe(f), "\n", r.table());
    REQUIRE(f_transitive_suite(f, a).all_pass());
  }
}

TEST_CASE("theorem suites exhaustively at three points") {
  // Every explicit family of one or two maps on at most three points.
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<FiniteMap> all;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= n;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Point> t(n);
      for (std::size_t i = 0, c = code; i < n; ++i, c /= n) t[i] = static_cast<Point>(c % n);
      all.emplace_back(t);
    }
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i; j < all.size(); ++j) {
        std::vector<FiniteMap> m{all[i]};
        if (j != i) m.push_back(all[j]);
        auto f = GdsFamily::explicit_family(FiniteSpace::cyclic(n), m);
        auto r = gds_theorem_suites(f);
        REQUIRE_MESSAGE(r.all_pass(), describe(f), "\n", r.table());
      }
  }
}

TEST_CASE("association with the NDDS properties") {
  for (const auto& sys : exhaustive_corpus(3, 2, 1, 2)) {
    auto r = association_suite(sys, sys.all_surjective());
    REQUIRE_MESSAGE(r.all_pass(), describe(sys), "\n", r.table());
    REQUIRE(word_family_suite(sys).all_pass());
  }
  Ndds not_onto(FiniteSpace::discrete(2), {FiniteMap({0, 0})}, {{}, {0}});
  CHECK_THROWS_AS(association_suite(not_onto, true), Error);
}

TEST_CASE("GDS morphisms") {
  auto z4 = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  auto z2 = Ndds::autonomous(FiniteSpace::discrete(2), FiniteMap::rotation(2, 1));
  auto f = GdsFamily::iterate_family(z4), g = GdsFamily::iterate_family(z2);
  PointMap phi({0, 1, 0, 1}, 2);
  GdsMorphism strong{f, g, phi, {}, GdsMorphismMode::StrongSemi};
  CHECK(verify_gds_morphism(strong).is_true());
  CHECK(gds_preservation_suite(strong).all_pass());

  auto e4 = z4_plus_one();
  auto e2 = GdsFamily::explicit_family(FiniteSpace::discrete(2), {FiniteMap::rotation(2, 1)});
  GdsMorphism semi{e4, e2, phi, {0}, GdsMorphismMode::Semi};
  CHECK(verify_gds_morphism(semi).is_true());
  CHECK(gds_preservation_suite(semi).all_pass());
  semi.mode = GdsMorphismMode::Conj;
  CHECK(verify_gds_morphism(semi).is_false());  // phi is not bijective
  semi.mode = GdsMorphismMode::StrongSemi;
  CHECK(verify_gds_morphism(semi).is_false());  // strong modes need iterate families

  GdsMorphism broken{e4, e2, PointMap({0, 0, 1, 1}, 2), {0}, GdsMorphismMode::Semi};
  CHECK(verify_gds_morphism(broken).is_false());
  CHECK_THROWS_AS(gds_preservation_suite(broken), Error);
}
