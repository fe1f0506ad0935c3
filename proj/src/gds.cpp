#include "transit/gds.hpp"

#include "transit/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace transit {

namespace {

constexpr std::size_t kEnumerate = 16;

std::vector<FiniteMap> distinct(const std::vector<FiniteMap>& maps) {
  std::vector<FiniteMap> out;
  std::unordered_set<FiniteMap, FiniteMapHash> seen;
  for (const auto& m : maps)
    if (seen.insert(m).second) out.push_back(m);
  return out;
}

std::string tf(bool b) { return b ? "True" : "False"; }

template <class F>
std::optional<PointSet> first_subset(std::size_t n, F bad) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m) {
    auto a = PointSet::from_mask(n, m);
    if (bad(a)) return a;
  }
  return std::nullopt;
}

bool plus_invariant(const GdsFamily& f, const PointSet& a) { return family_image(f, a).subset_of(a); }
bool minus_invariant(const GdsFamily& f, const PointSet& a) { return family_preimage(f, a).subset_of(a); }

// Successors of a set under one member application, then saturation.
PointSet saturate(const GdsFamily& f, PointSet frontier, bool backward) {
  PointSet seen(f.size());
  while (!frontier.empty()) {
    PointSet next = backward ? family_preimage(f, frontier) : family_image(f, frontier);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

// ---------------------------------------------------------------------------
// GdsFamily

GdsFamily::GdsFamily(Kind k, FiniteSpace s, std::vector<FiniteMap> m, std::optional<Ndds> src)
    : kind_(k), space_(std::move(s)), members_(std::move(m)), source_(std::move(src)) {}

GdsFamily GdsFamily::explicit_family(FiniteSpace space, std::vector<FiniteMap> maps) {
  if (maps.empty()) throw Error(ErrorCode::InvalidMap, "a family needs at least one map");
  for (const auto& m : maps)
    if (m.size() != space.size()) throw Error(ErrorCode::InvalidMap, "map " + m.to_string() + " has the wrong size");
  return GdsFamily(Kind::Explicit, std::move(space), distinct(maps), std::nullopt);
}

GdsFamily GdsFamily::iterate_family(const Ndds& sys) {
  return GdsFamily(Kind::Iterate, sys.space(), distinct(sys.trace().maps()), sys);
}

const Ndds& GdsFamily::source() const {
  if (!source_) throw Error(ErrorCode::BackendMismatch, "explicit families have no source system");
  return *source_;
}

bool GdsFamily::is_semigroup() const {
  std::unordered_set<FiniteMap, FiniteMapHash> set(members_.begin(), members_.end());
  for (const auto& a : members_)
    for (const auto& b : members_)
      if (!set.count(compose(a, b))) return false;
  return true;
}

bool GdsFamily::all_surjective() const {
  return std::all_of(members_.begin(), members_.end(), [](const FiniteMap& m) { return m.is_surjective(); });
}

PointSet family_image(const GdsFamily& f, const PointSet& a) {
  PointSet out(f.size());
  for (const auto& m : f.members()) out |= m.image(a);
  return out;
}

PointSet family_preimage(const GdsFamily& f, const PointSet& b) {
  PointSet out(f.size());
  for (const auto& m : f.members()) out |= m.preimage(b);
  return out;
}

OrbitResult gds_orbit(const GdsFamily& f, Point x) {
  f.space().check_point(x);
  return {saturate(f, PointSet::singleton(f.size(), x), false), f.size(), true};
}

OrbitResult gds_negative_orbit(const GdsFamily& f, Point x) {
  f.space().check_point(x);
  return {saturate(f, PointSet::singleton(f.size(), x), true), f.size(), true};
}

PointSet gds_omega(const GdsFamily& f, Point x) {
  auto o = gds_orbit(f, x).points;
  PointSet out(f.size());
  o.for_each([&](Point c) {
    auto oc = gds_orbit(f, c).points;
    if (oc.contains(c)) out |= oc;
  });
  return out;
}

PointSet gds_transitive_points(const GdsFamily& f) {
  PointSet t(f.size());
  for (Point x = 0; x < f.size(); ++x)
    if (gds_orbit(f, x).points.is_full()) t.insert(x);
  return t;
}

Report gds_equation_checks(const GdsFamily& f, const PointSet& a, const PointSet& b, Point x) {
  Report r("gds-equations");
  const auto n = f.size();
  const auto xs = PointSet::singleton(n, x);
  const std::string w = "A=" + a.to_string() + " B=" + b.to_string() + " x=" + std::to_string(x);
  r.check("gds", "image-meets<=>preimage-meets",
          family_image(f, a).intersects(b) == a.intersects(family_preimage(f, b)), w);
  r.check("gds", "point-image<=>point-preimage",
          family_image(f, xs).intersects(b) == family_preimage(f, b).contains(x), w);
  r.check("gds", "plus-minus-duality", plus_invariant(f, a) == minus_invariant(f, a.complement()), w);

  auto o = gds_orbit(f, x).points, on = gds_negative_orbit(f, x).points;
  r.check("gds", "F(x)<=O(x)", family_image(f, xs).subset_of(o), w);
  r.check("gds", "F-1(x)<=O-(x)", family_preimage(f, xs).subset_of(on), w);
  r.check("gds", "orbit-plus-invariant", plus_invariant(f, o), w);
  if (f.is_semigroup()) {
    r.check("gds", "semigroup-F(x)=O(x)", family_image(f, xs) == o && family_preimage(f, xs) == on, w);
    r.check("gds", "semigroup-F(A)-plus", plus_invariant(f, family_image(f, a)), w);
    r.check("gds", "semigroup-F-1(A)-minus", minus_invariant(f, family_preimage(f, a)), w);
    r.check("gds", "semigroup-Trans-minus", minus_invariant(f, gds_transitive_points(f)), w);
  }
  return r;
}

// ---------------------------------------------------------------------------
// F-transitive sets. Opene sets meeting A reduce to singletons inside A.

namespace {

template <class Rel>
bool all_pairs_in(const PointSet& a, Rel rel) {
  bool ok = true;
  a.for_each([&](Point u) {
    if (!ok) return;
    a.for_each([&](Point v) {
      if (ok && !rel(u, v)) ok = false;
    });
  });
  return ok;
}

}  // namespace

Verdict is_f_transitive_set(const GdsFamily& f, const PointSet& a) {
  return Verdict::from(all_pairs_in(a, [&](Point u, Point v) { return gds_orbit(f, u).points.contains(v); }));
}

Report f_transitive_suite(const GdsFamily& f, const PointSet& a) {
  Report r("f-transitive-suite");
  const auto n = f.size();
  const bool semigroup = f.is_semigroup();
  auto one = [&](Point p) { return PointSet::singleton(n, p); };

  bool i = is_f_transitive_set(f, a).is_true();
  bool ii = all_pairs_in(a, [&](Point u, Point v) {
    return std::any_of(f.members().begin(), f.members().end(), [&](const FiniteMap& m) { return m(u) == v; });
  });
  bool iii = all_pairs_in(a, [&](Point u, Point v) { return family_preimage(f, one(v)).contains(u); });
  bool iv = all_pairs_in(a, [&](Point u, Point v) { return family_image(f, one(u)).contains(v); });
  bool v = true;
  a.for_each([&](Point y) { v = v && a.subset_of(family_preimage(f, one(y))); });
  // The closure of A is A itself, and {x ∈ A : A ⊆ F(x)} must be all of A.
  bool cl = all_pairs_in(a, [&](Point u, Point w) { return family_image(f, one(u)).contains(w); });
  PointSet b(n);
  a.for_each([&](Point x) {
    if (a.subset_of(family_image(f, one(x)))) b.insert(x);
  });
  bool dense = b == a;

  const std::string w = "i=" + tf(i) + " ii=" + tf(ii) + " iii=" + tf(iii) + " iv=" + tf(iv) + " v=" + tf(v) +
                        " closure=" + tf(cl) + " dense-subset=" + tf(dense);
  r.check("f-transitive", "ii<=>iii", ii == iii, w);
  r.check("f-transitive", "ii<=>iv", ii == iv, w);
  r.check("f-transitive", "ii<=>v", ii == v, w);
  r.check("f-transitive", "ii<=>closure", ii == cl, w);
  r.check("f-transitive", "ii<=>dense-subset", ii == dense, w);
  r.check("f-transitive", "ii=>i", !ii || i, w);
  if (semigroup) r.check("f-transitive", "i=>ii", !i || ii, w, "semigroup");
  return r;
}

// ---------------------------------------------------------------------------
// Deciders

std::string_view to_string(GdsProperty p) noexcept {
  switch (p) {
    case GdsProperty::TT: return "TT";
    case GdsProperty::ST: return "ST";
    case GdsProperty::VST: return "VST";
    case GdsProperty::Minimal: return "Minimal";
    case GdsProperty::TM: return "TM";
    case GdsProperty::LEO: return "LEO";
  }
  return "?";
}

GdsProperty parse_gds_property(std::string_view s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto p : kAllGdsProperties) {
    std::string name;
    for (char c : to_string(p)) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == name) return p;
  }
  throw Error(ErrorCode::UnknownVariant, "unknown GDS property '" + std::string(s) + "'");
}

Decision gds_decide(const GdsFamily& f, GdsProperty p, const GdsOptions& opt) {
  const auto n = f.size();
  auto one = [&](Point x) { return PointSet::singleton(n, x); };
  auto yes = [](std::string w = {}) { return Decision{Verdict::yes(), std::move(w), std::nullopt}; };
  auto no = [](std::string w) { return Decision{Verdict::no(), std::move(w), std::nullopt}; };

  const bool topological = p == GdsProperty::VST || p == GdsProperty::TM || p == GdsProperty::LEO;
  if (topological && f.kind() == GdsFamily::Kind::Explicit && !opt.allow_degenerate) {
    throw Error(ErrorCode::DegenerateTopology, std::string(to_string(p)) +
                                                   " on a finite family is vacuous or trivial; use an iterate family");
  }

  switch (p) {
    case GdsProperty::TT:
      for (Point u = 0; u < n; ++u)
        for (Point v = 0; v < n; ++v)
          if (!gds_orbit(f, u).points.contains(v))
            return no("U={" + std::to_string(u) + "} V={" + std::to_string(v) + "}");
      return yes();
    case GdsProperty::ST:
      for (Point u = 0; u < n; ++u)
        if (!saturate(f, one(u), false).is_full()) return no("U={" + std::to_string(u) + "}");
      return yes();
    case GdsProperty::Minimal:
      for (Point x = 0; x < n; ++x) {
        auto a = gds_orbit(f, x).points | one(x);
        if (!a.is_full()) return no("A=" + a.to_string());
      }
      return yes();
    case GdsProperty::VST: {
      if (f.kind() == GdsFamily::Kind::Explicit) {
        // S = F is compact.
        for (Point u = 0; u < n; ++u)
          if (!family_image(f, one(u)).is_full()) return no("U={" + std::to_string(u) + "}");
        return yes("S=F");
      }
      const auto& tr = f.source().trace();
      std::size_t k = 0;
      for (Point u = 0; u < n; ++u) {
        PointSet acc(n);
        std::size_t ku = 0;
        for (std::size_t m = 1; m <= tr.length() && !ku; ++m) {
          acc.insert(tr.iterate(m)(u));
          if (acc.is_full()) ku = m;
        }
        if (!ku) return no("U={" + std::to_string(u) + "}");
        k = std::max(k, ku);
      }
      return {Verdict::yes(), "S={1.." + std::to_string(k) + "}", k};
    }
    case GdsProperty::TM:
    case GdsProperty::LEO: {
      if (f.kind() == GdsFamily::Kind::Explicit) return yes("S=F");
      const auto& tr = f.source().trace();
      const auto cyc = tr.cycle_indices();
      for (Point u = 0; u < n; ++u) {
        if (p == GdsProperty::LEO) {
          for (auto m : cyc)
            if (!tr.iterate(m).image(one(u)).is_full())
              return no("U={" + std::to_string(u) + "} n=" + std::to_string(m));
        } else {
          for (Point v = 0; v < n; ++v)
            for (auto m : cyc)
              if (tr.iterate(m)(u) != v)
                return no("U={" + std::to_string(u) + "} V={" + std::to_string(v) + "} n=" + std::to_string(m));
        }
      }
      return yes();
    }
  }
  throw Error(ErrorCode::UnknownVariant, "unknown GDS property");
}

// ---------------------------------------------------------------------------
// Theorem suites

Report gds_theorem_suites(const GdsFamily& f) {
  Report r("gds-theorem-suites");
  const auto n = f.size();
  const bool semigroup = f.is_semigroup();
  const bool surjective = f.all_surjective();
  const bool enumerate = n <= kEnumerate;
  auto one = [&](Point x) { return PointSet::singleton(n, x); };
  auto every = [&](auto pred) {
    for (Point x = 0; x < n; ++x)
      if (!pred(x)) return false;
    return true;
  };

  const bool tt = gds_decide(f, GdsProperty::TT).verdict.is_true();

  // Transitivity through F-transitive sets (single members).
  {
    bool ii = is_f_transitive_set(f, f.space().whole()).is_true();
    bool iii = every([&](Point u) { return family_image(f, one(u)).is_full(); });
    bool iv = every([&](Point v) { return family_preimage(f, one(v)).is_full(); });
    // Single-member reachability for X as an F-transitive set, by the
    // proposition's (ii).
    bool ii_member = every([&](Point u) { return family_image(f, one(u)).is_full(); });
    std::string w = "i=" + tf(tt) + " ii=" + tf(ii) + " iii=" + tf(iii) + " iv=" + tf(iv);
    r.check("gds-tt-semigroup", "iii<=>iv", iii == iv, w);
    r.check("gds-tt-semigroup", "ii<=>i", ii == tt, w);
    r.check("gds-tt-semigroup", "iii=>i", !ii_member || tt, w);
    if (semigroup) r.check("gds-tt-semigroup", "i=>iii", !tt || iii, w, "semigroup");
  }

  // Dense - invariant sets force transitivity in the semigroup case.
  if (semigroup) {
    if (enumerate) {
      auto bad = first_subset(n, [&](const PointSet& a) { return !a.is_full() && minus_invariant(f, a); });
      r.check("gds-dense-invariant", "minus-dense=>TT", bad.has_value() || tt,
              "proper-minus-set=" + (bad ? bad->to_string() : std::string("none")) + " TT=" + tf(tt));
    } else {
      r.add("gds-dense-invariant", "minus-dense=>TT", Verdict::unknown(kEnumerate), {}, "subset enumeration limit");
    }
  }

  // Transitivity characterization.
  {
    std::map<std::string, bool> c;
    c["i"] = tt;
    c["ii"] = every([&](Point u) { return every([&](Point v) { return gds_negative_orbit(f, u).points.contains(v); }); });
    c["iii"] = every([&](Point u) { return saturate(f, one(u), false).is_full(); });
    c["iv"] = every([&](Point u) { return saturate(f, one(u), true).is_full(); });
    if (enumerate) {
      c["v"] = !first_subset(n, [&](const PointSet& a) { return !a.is_full() && plus_invariant(f, a); });
      c["vi"] = !first_subset(n, [&](const PointSet& a) {
        return !a.is_full() && std::all_of(f.members().begin(), f.members().end(),
                                           [&](const FiniteMap& m) { return a.subset_of(m.image(a)); });
      });
    } else {
      c["v"] = every([&](Point x) { return (gds_orbit(f, x).points | one(x)).is_full(); });
    }
    auto trans = gds_transitive_points(f);
    PointSet by_omega(n);
    for (Point x = 0; x < n; ++x)
      if (gds_omega(f, x).is_full()) by_omega.insert(x);
    c["vii"] = !trans.empty();
    c["viii"] = trans.is_full() && trans == by_omega;

    std::string w;
    for (const auto& [k, v] : c) w += (w.empty() ? "" : " ") + k + "=" + tf(v);
    for (const char* k : {"ii", "iii", "iv", "v"}) r.check("gds-tt-theorem", std::string("i<=>") + k, c["i"] == c[k], w);
    if (surjective) {
      for (const char* k : {"vi", "vii", "viii"})
        if (c.count(k)) r.check("gds-tt-theorem", std::string("i<=>") + k, c["i"] == c[k], w, "surjective");
    }
    r.check("gds-tt-theorem", "i=>vii", !c["i"] || c["vii"], w);
    r.check("gds-tt-theorem", "viii=>vii", !c["viii"] || c["vii"], w);
    r.check("gds-tt-theorem", "Trans=omega-set", trans == by_omega,
            "Trans=" + trans.to_string() + " omega=" + by_omega.to_string());
  }

  // Strong transitivity.
  {
    bool i = gds_decide(f, GdsProperty::ST).verdict.is_true();
    bool ii = every([&](Point u) { return every([&](Point x) { return gds_orbit(f, u).points.contains(x); }); });
    bool iii = every([&](Point x) { return gds_negative_orbit(f, x).points.is_full(); });
    std::string w = "i=" + tf(i) + " ii=" + tf(ii) + " iii=" + tf(iii);
    r.check("gds-st-theorem", "i<=>ii", i == ii, w);
    r.check("gds-st-theorem", "i<=>iii", i == iii, w);
    if (semigroup) {
      bool img = every([&](Point u) { return family_image(f, one(u)).is_full(); });
      bool pre = every([&](Point x) { return family_preimage(f, one(x)).is_full(); });
      r.check("gds-st-theorem", "semigroup-F(U)=X", i == img && img == pre,
              w + " F(U)=X:" + tf(img) + " F-1(x)-dense:" + tf(pre));
    }
  }

  // Minimality.
  {
    std::map<std::string, bool> c;
    c["i"] = gds_decide(f, GdsProperty::Minimal).verdict.is_true();
    c["ii"] = every([&](Point u) { return every([&](Point x) { return gds_orbit(f, x).points.contains(u); }); });
    c["iii"] = every([&](Point x) { return gds_orbit(f, x).points.is_full(); });
    c["iv"] = gds_transitive_points(f).is_full();
    c["v"] = every([&](Point u) { return gds_negative_orbit(f, u).points.is_full(); });
    // Finite subfamilies grown one member at a time until the union
    // stabilizes.
    c["vi"] = every([&](Point u) {
      for (std::size_t k = 1; k <= f.members().size(); ++k) {
        auto sub = GdsFamily::explicit_family(
            f.space(), std::vector<FiniteMap>(f.members().begin(), f.members().begin() + static_cast<long>(k)));
        if (gds_negative_orbit(sub, u).points.is_full()) return true;
      }
      return false;
    });
    if (enumerate) {
      c["vii"] = !first_subset(n, [&](const PointSet& a) { return !a.is_full() && plus_invariant(f, a); });
    } else {
      c["vii"] = every([&](Point x) { return (gds_orbit(f, x).points | one(x)).is_full(); });
    }
    std::string w;
    for (const auto& [k, v] : c) w += (w.empty() ? "" : " ") + k + "=" + tf(v);
    for (const char* k : {"ii", "iii", "iv", "v", "vi", "vii"})
      r.check("gds-minimal-theorem", std::string("i<=>") + k, c["i"] == c[k], w);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Association with an NDDS

GdsFamily associate(const Ndds& sys, AssociationMode mode) {
  if (mode == AssociationMode::Iterate) return GdsFamily::iterate_family(sys);
  return GdsFamily::explicit_family(sys.space(), sys.used_maps());
}

Report association_suite(const Ndds& sys, bool include_leo) {
  if (include_leo && !sys.all_surjective()) {
    throw Error(ErrorCode::NotSurjective, "the eventually-onto association needs every used map surjective");
  }
  Report r("association-suite");
  auto ff = associate(sys, AssociationMode::Family);
  auto fi = associate(sys, AssociationMode::Iterate);
  auto pair = [&](const char* id, PropertyId np, const GdsFamily& g, GdsProperty gp) {
    bool a = decide(sys, np, "i").verdict.is_true();
    bool b = gds_decide(g, gp).verdict.is_true();
    r.check("association", id, a == b,
            std::string(to_string(np)) + "=" + tf(a) + " GDS-" + std::string(to_string(gp)) + "=" + tf(b));
  };
  pair("ExtTT<=>TT", PropertyId::ExtTT, ff, GdsProperty::TT);
  pair("StrongExtTT<=>ST", PropertyId::StrongExtTT, ff, GdsProperty::ST);
  pair("ExtMinimal<=>Minimal", PropertyId::ExtMinimal, ff, GdsProperty::Minimal);
  pair("VST<=>VST", PropertyId::VST, fi, GdsProperty::VST);
  pair("TM<=>TM", PropertyId::TM, fi, GdsProperty::TM);
  if (include_leo) pair("LEO<=>LEO", PropertyId::LEO, fi, GdsProperty::LEO);
  return r;
}

// ---------------------------------------------------------------------------
// Semigroup closure

GdsFamily semigroup_closure(const GdsFamily& f, std::size_t bound) {
  std::vector<FiniteMap> all = f.members();
  std::unordered_set<FiniteMap, FiniteMapHash> seen(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& m : f.members()) {
      auto c = compose(m, all[i]);
      if (seen.insert(c).second) {
        all.push_back(c);
        if (all.size() > bound) {
          throw Error(ErrorCode::ClosureExceedsBound,
                      "composition closure has more than " + std::to_string(bound) + " maps");
        }
      }
    }
  }
  return GdsFamily::explicit_family(f.space(), std::move(all));
}

Report closure_suite(const GdsFamily& f, std::size_t bound) {
  Report r("closure-suite");
  auto g = semigroup_closure(f, bound);
  r.check("closure", "is-semigroup", g.is_semigroup(), std::to_string(g.members().size()) + " maps");
  for (auto p : {GdsProperty::TT, GdsProperty::ST, GdsProperty::Minimal}) {
    bool a = gds_decide(f, p).verdict.is_true(), b = gds_decide(g, p).verdict.is_true();
    r.check("closure", std::string(to_string(p)), !a || b, "F=" + tf(a) + " G=" + tf(b));
  }
  return r;
}

Report word_family_suite(const Ndds& sys, std::size_t bound) {
  Report r("word-family-suite");
  auto words = semigroup_closure(associate(sys, AssociationMode::Family), bound);
  auto pair = [&](PropertyId np, GdsProperty gp) {
    bool a = decide(sys, np, "i").verdict.is_true(), b = gds_decide(words, gp).verdict.is_true();
    r.check("word-family", std::string(to_string(np)) + "=>" + std::string(to_string(gp)), !a || b,
            "NDDS=" + tf(a) + " words=" + tf(b));
  };
  pair(PropertyId::TT, GdsProperty::TT);
  pair(PropertyId::ST, GdsProperty::ST);
  pair(PropertyId::ExtMinimal, GdsProperty::Minimal);
  return r;
}

// ---------------------------------------------------------------------------
// Morphisms

std::string_view to_string(GdsMorphismMode m) noexcept {
  switch (m) {
    case GdsMorphismMode::Semi: return "semiconjugacy";
    case GdsMorphismMode::Conj: return "conjugacy";
    case GdsMorphismMode::StrongSemi: return "strong-semiconjugacy";
    case GdsMorphismMode::StrongConj: return "strong-conjugacy";
  }
  return "?";
}

namespace {

bool intertwines(const PointMap& phi, const FiniteMap& f, const FiniteMap& g) {
  for (Point x = 0; x < phi.domain(); ++x)
    if (phi(f(x)) != g(phi(x))) return false;
  return true;
}

bool bijective(const PointMap& phi) { return phi.domain() == phi.codomain && phi.is_surjective(); }

}  // namespace

Verdict verify_gds_morphism(const GdsMorphism& m) {
  if (m.phi.domain() != m.domain.size() || m.phi.codomain != m.codomain.size()) {
    throw Error(ErrorCode::InvalidMap, "phi does not map the domain space to the codomain space");
  }
  if (!m.phi.is_surjective()) return Verdict::no();
  const bool strong = m.mode == GdsMorphismMode::StrongSemi || m.mode == GdsMorphismMode::StrongConj;
  const bool conj = m.mode == GdsMorphismMode::Conj || m.mode == GdsMorphismMode::StrongConj;
  const bool indexed = m.h.empty();

  if (indexed) {
    // h(f_1^n) = g_1^n, a bijection of the index sets.
    if (m.domain.kind() != GdsFamily::Kind::Iterate || m.codomain.kind() != GdsFamily::Kind::Iterate) {
      return Verdict::no();
    }
    const auto& ta = m.domain.source().trace();
    const auto& tb = m.codomain.source().trace();
    const std::size_t range = std::max(ta.preperiod(), tb.preperiod()) + std::lcm(ta.cycle(), tb.cycle());
    for (std::size_t n = 1; n <= range; ++n)
      if (!intertwines(m.phi, ta.iterate(n), tb.iterate(n))) return Verdict::no();
    return Verdict::from(!conj || bijective(m.phi));
  }

  // Extensional h on members; strong modes need the index structure.
  if (strong) return Verdict::no();
  const auto& fm = m.domain.members();
  const auto& gm = m.codomain.members();
  if (m.h.size() != fm.size()) return Verdict::no();
  std::vector<bool> hit(gm.size(), false);
  for (std::size_t i = 0; i < fm.size(); ++i) {
    if (m.h[i] >= gm.size()) return Verdict::no();
    hit[m.h[i]] = true;
    if (!intertwines(m.phi, fm[i], gm[m.h[i]])) return Verdict::no();
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) return Verdict::no();
  if (conj && (!bijective(m.phi) || fm.size() != gm.size())) return Verdict::no();
  return Verdict::yes();
}

Report gds_preservation_suite(const GdsMorphism& m) {
  if (!verify_gds_morphism(m).is_true()) {
    throw Error(ErrorCode::InvalidMorphism, "(phi, h) is not a " + std::string(to_string(m.mode)));
  }
  Report r("gds-preservation-suite");
  std::vector<GdsProperty> props{GdsProperty::TT, GdsProperty::ST};
  if (m.mode == GdsMorphismMode::StrongSemi || m.mode == GdsMorphismMode::StrongConj) {
    props.insert(props.end(), {GdsProperty::VST, GdsProperty::TM, GdsProperty::LEO});
  }
  for (auto p : props) {
    bool a = gds_decide(m.domain, p).verdict.is_true(), b = gds_decide(m.codomain, p).verdict.is_true();
    r.check("gds-preserve", std::string(to_string(p)), !a || b, "domain=" + tf(a) + " codomain=" + tf(b),
            std::string(to_string(m.mode)));
  }
  return r;
}

}  // namespace transit
