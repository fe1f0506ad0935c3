#include "doctest.h"

#include "oracle.hpp"
#include "transit/error.hpp"
#include "transit/harness.hpp"
#include "transit/transitivity.hpp"

using namespace transit;

namespace {

bool expected(const oracle::Facts& f, PropertyId p) {
  switch (p) {
    case PropertyId::TT: return f.tt;
    case PropertyId::ExtTT: return f.ext_tt;
    case PropertyId::ST: return f.st;
    case PropertyId::StrongExtTT: return f.strong_ext_tt;
    case PropertyId::VST: return f.vst;
    case PropertyId::ExtMinimal: return f.ext_minimal;
    case PropertyId::Exact: return f.exact;
    case PropertyId::FullyExact: return f.fully_exact;
    case PropertyId::ExactTT: return f.exact_tt;
    case PropertyId::StrongExactTT: return f.strong_exact_tt;
    case PropertyId::TM: return f.tm;
    case PropertyId::LEO: return f.leo;
  }
  return false;
}

void agree_with_oracle(const Ndds& sys) {
  auto f = oracle::facts(sys);
  for (auto p : kAllProperties) {
    auto d = decide(sys, p);
    REQUIRE(d.verdict.exact());
    REQUIRE_MESSAGE(d.verdict.is_true() == expected(f, p), to_string(p), " on ", describe(sys));
  }
}

}  // namespace

TEST_CASE("property names") {
  for (auto p : kAllProperties) CHECK(parse_property(to_string(p)) == p);
  CHECK(parse_property("tt") == PropertyId::TT);
  CHECK_THROWS_AS(parse_property("chaos"), Error);
  CHECK(variants(PropertyId::ST).size() == 5);
  CHECK(variants(PropertyId::ExtMinimal).size() == 8);
  CHECK(variants(PropertyId::StrongExactTT).size() == 4);
  CHECK(variants(PropertyId::TM).size() == 4);
  CHECK(variants(PropertyId::LEO).size() == 3);
  CHECK(perfect_only(PropertyId::TT, "iv"));
  CHECK(!perfect_only(PropertyId::TT, "iii"));
}

TEST_CASE("Z4 rotation") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  CHECK(decide(sys, PropertyId::TT).verdict == Verdict::yes());
  CHECK(decide(sys, PropertyId::ST).verdict == Verdict::yes());
  CHECK(decide(sys, PropertyId::ExtMinimal).verdict == Verdict::yes());
  CHECK(decide(sys, PropertyId::TM).verdict == Verdict::no());
  CHECK(decide(sys, PropertyId::LEO).verdict == Verdict::no());
  CHECK(decide(sys, PropertyId::Exact).verdict == Verdict::no());
  auto h = hitting_set(sys, PointSet(4, {0}), PointSet(4, {2}));
  CHECK(h.contains(2));
  CHECK(h.contains(6));
  CHECK(!h.contains(3));
  CHECK(h.infinite());
  CHECK(!h.cofinite());
  CHECK(h.first() == 2u);
}

TEST_CASE("perfect-only conditions are gated") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  CHECK_THROWS_AS(decide(sys, PropertyId::TT, "iv"), Error);
  CHECK_NOTHROW(decide(sys, PropertyId::TT, "iv", DecideOptions{true}));
  CHECK_THROWS_AS(decide(sys, PropertyId::TT, "xiii"), Error);
}

TEST_CASE("every decider matches the brute-force oracle on the exhaustive corpus") {
  for (const auto& sys : exhaustive_corpus(3, 2, 1, 2)) agree_with_oracle(sys);
}

TEST_CASE("every decider matches the brute-force oracle on random systems") {
  Rng rng(2024);
  for (int i = 0; i < 300; ++i) agree_with_oracle(random_ndds(rng, {1, 4, 3, 2, 3}));
}

TEST_CASE("singleton basis: all-subset quantification changes nothing") {
  // The oracle already ranges over every subset; here the hitting sets of
  // unions are the unions of hitting sets.
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    auto sys = random_ndds(rng, {2, 4, 2, 2, 2});
    const auto n = sys.size();
    for (std::uint64_t u = 1; u < (1u << n); ++u)
      for (std::uint64_t v = 1; v < (1u << n); ++v) {
        auto h = hitting_set(sys, PointSet::from_mask(n, u), PointSet::from_mask(n, v));
        for (std::size_t k = 1; k <= 40; ++k) {
          bool any = false;
          for (Point a = 0; a < n; ++a)
            for (Point b = 0; b < n; ++b)
              if ((u >> a & 1) && (v >> b & 1))
                any = any || hitting_set(sys, PointSet::singleton(n, a), PointSet::singleton(n, b)).contains(k);
          REQUIRE(h.contains(k) == any);
        }
      }
  }
}

TEST_CASE("extended hitting sets") {
  FiniteMap a({1, 1, 2}), b({2, 2, 2});
  Ndds sys(FiniteSpace::discrete(3), {a, b}, {{}, {0, 1}});
  auto w = extended_hitting_set(sys, PointSet(3, {0}), PointSet(3, {1}), 3);
  CHECK(w.nonempty);
  REQUIRE(w.shortest.has_value());
  CHECK(w.shortest->letters.size() == 1);
  auto none = extended_hitting_set(sys, PointSet(3, {2}), PointSet(3, {0}), 4);
  CHECK(!none.nonempty);
}

TEST_CASE("transitive points") {
  auto sys = Ndds::autonomous(FiniteSpace::cyclic(4), FiniteMap::rotation(4, 1));
  auto t = transitive_points(sys);
  CHECK(t.by_definition.is_full());
  CHECK(t.by_omega == t.by_definition);
  Ndds sink(FiniteSpace::discrete(3), {FiniteMap({1, 2, 2})}, {{}, {0}});
  CHECK(transitive_points(sink).by_definition.empty());
}

TEST_CASE("exhaustive equivalence suites") {
  // Criterion groups that agree exactly; the TT group has a known one-way
  // failure and the open-map VST theorem is exercised separately.
  for (const auto& sys : exhaustive_corpus(3, 2, 1, 2)) {
    for (auto p : {PropertyId::ST, PropertyId::VST, PropertyId::ExtMinimal, PropertyId::StrongExactTT, PropertyId::TM,
                   PropertyId::LEO, PropertyId::ExtTT, PropertyId::StrongExtTT}) {
      auto r = equivalence_suite(sys, p);
      REQUIRE_MESSAGE(r.all_pass(), describe(sys), "\n", r.table());
    }
    REQUIRE(implication_lattice_check(sys).all_pass());
    REQUIRE(corollary_checks(sys).all_pass());
    REQUIRE(orbit_laws(sys).all_pass());
  }
}

TEST_CASE("TT group: the two-way conditions agree") {
  for (const auto& sys : exhaustive_corpus(3, 2, 1, 2)) {
    for (const auto& rec : equivalence_suite(sys, PropertyId::TT).records())
      if (rec.note != "one-way") REQUIRE_MESSAGE(rec.verdict.is_true(), describe(sys), " ", rec.variant);
  }
}

TEST_CASE("TT one-way check (v)=>(iii) has a two-point counterexample") {
  // f_n alternates id and the constant 0; (v) holds but U={0}, V={1} never meet.
  Ndds sys(FiniteSpace::discrete(2), {FiniteMap({0, 0}), FiniteMap({0, 1})}, {{}, {1, 0}});
  CHECK(decide(sys, PropertyId::TT, "v", DecideOptions{true}).verdict.is_true());
  CHECK(decide(sys, PropertyId::TT, "iii").verdict.is_false());
}

TEST_CASE("open-map VST theorem fails on two points") {
  // f_1 = swap, then the identity forever: f_1^n(U) is a single point, so
  // neither VST nor ST, yet no proper closed set is strongly - invariant.
  Ndds sys(FiniteSpace::discrete(2), {FiniteMap({0, 1}), FiniteMap({1, 0})}, {{1}, {0}});
  CHECK(decide(sys, PropertyId::VST).verdict.is_false());
  CHECK(decide(sys, PropertyId::ST).verdict.is_false());
  bool flagged = false;
  for (const auto& r : vst_open_map_suite(sys).records()) flagged = flagged || r.verdict.is_false();
  CHECK(flagged);
}

TEST_CASE("injective families with two or more points are never exact") {
  Rng rng(8);
  RandomOptions o{2, 6, 3, 2, 3};
  o.surjective = true;
  for (int i = 0; i < 300; ++i) CHECK(decide(random_ndds(rng, o), PropertyId::Exact).verdict.is_false());
}
