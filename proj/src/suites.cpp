#include "transit/transitivity.hpp"

#include "transit/error.hpp"
#include "transit/invariance.hpp"
#include "transit/orbit.hpp"

#include <algorithm>
#include <map>

namespace transit {

namespace {

constexpr std::size_t kEnumerate = 16;

std::string show(std::string_view v, const Decision& d) {
  std::string s = std::string(v) + "=" + d.verdict.to_string();
  if (d.verdict.is_false() && !d.witness.empty()) s += "(" + d.witness + ")";
  return s;
}

// Variants that take part in the agreement group on the finite backend.
std::vector<std::string> finite_group(PropertyId p) {
  if (p == PropertyId::TT) return {"i", "ii", "iii", "vii", "viii", "ix", "x"};
  if (p == PropertyId::ExtTT) return {"i", "ii", "iii", "vii", "viii", "ix", "x", "xi", "xii"};
  return variants(p);
}

template <class F>
void for_each_subset(std::size_t n, F f) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m) f(PointSet::from_mask(n, m));
}

}  // namespace

Report equivalence_suite(const Ndds& sys, PropertyId p) {
  Report r("equivalence-suite");
  const std::string name(to_string(p));
  std::map<std::string, Decision> d;
  for (const auto& v : finite_group(p)) d.emplace(v, decide(sys, p, v));

  const auto& ref = d.at("i");
  for (const auto& [v, dec] : d) {
    if (v == "i") continue;
    r.check(name, v, dec.verdict == ref.verdict, show("i", ref) + " " + show(v, dec));
  }
  if (d.size() == 1) r.check(name, "i", true, show("i", ref), "single condition");

  // Perfect-only conditions: only the implications that survive without
  // perfectness are asserted.
  if (p == PropertyId::TT || p == PropertyId::ExtTT) {
    const bool gated = p == PropertyId::ExtTT && !sys.all_surjective();
    DecideOptions force{true};
    auto iv = decide(sys, p, "iv", force);
    auto v = decide(sys, p, "v", force);
    auto vi = decide(sys, p, "vi", force);
    auto iii = decide(sys, p, "iii");
    auto one_way = [&](const char* id, const Decision& a, std::string_view an, const Decision& b,
                       std::string_view bn) {
      std::string w = show(an, a) + " " + show(bn, b);
      if (gated) {
        r.add(name, id, Verdict::unknown(0), w, "needs a surjective family on a finite space");
      } else {
        r.check(name, id, !a.verdict.is_true() || b.verdict.is_true(), w, "one-way");
      }
    };
    one_way("v=>iii", v, "v", iii, "iii");
    one_way("iv=>iii", iv, "iv", iii, "iii");
    one_way("vi=>v", vi, "vi", v, "v");
  }
  return r;
}

Report vst_open_map_suite(const Ndds& sys) {
  if (!sys.all_surjective()) {
    throw Error(ErrorCode::PreconditionViolated, "the open-map characterization needs every used map surjective");
  }
  Report r("vst-open-map-suite");
  auto vst = decide(sys, PropertyId::VST, "i");
  auto st = decide(sys, PropertyId::ST, "i");

  // (iii): no proper nonempty closed strong - invariant set.
  std::optional<PointSet> proper;
  const auto n = sys.size();
  auto strong_minus = [&](const PointSet& a) {
    return std::all_of(sys.used().begin(), sys.used().end(),
                       [&](std::size_t i) { return sys.family()[i].preimage(a).subset_of(a); });
  };
  if (n <= kEnumerate) {
    for_each_subset(n, [&](const PointSet& a) {
      if (!proper && !a.is_full() && strong_minus(a)) proper = a;
    });
  } else {
    for (Point x = 0; x < n && !proper; ++x) {
      auto a = extended_negative_orbit(sys, x).points;
      a.insert(x);
      if (!a.is_full()) proper = a;
    }
  }
  Decision iii{Verdict::from(!proper), proper ? "A=" + proper->to_string() : std::string{}, std::nullopt};

  r.check("VST", "i<=>ii", vst.verdict == st.verdict, show("i", vst) + " " + show("ii", st));
  r.check("VST", "ii<=>iii", st.verdict == iii.verdict, show("ii", st) + " " + show("iii", iii));
  return r;
}

Report implication_lattice_check(const Ndds& sys) {
  Report r("implication-lattice");
  std::map<PropertyId, bool> v;
  for (auto p : kAllProperties) v[p] = decide(sys, p, "i").verdict.is_true();

  auto imp = [&](PropertyId a, PropertyId b) {
    std::string w = std::string(to_string(a)) + "=" + (v[a] ? "True" : "False") + " " + std::string(to_string(b)) +
                    "=" + (v[b] ? "True" : "False");
    r.check("lattice", std::string(to_string(a)) + "=>" + std::string(to_string(b)), !v[a] || v[b], w);
  };
  using P = PropertyId;
  imp(P::LEO, P::VST);
  imp(P::VST, P::ST);
  imp(P::ST, P::TT);
  imp(P::ST, P::StrongExtTT);
  imp(P::StrongExtTT, P::ExtTT);
  imp(P::VST, P::StrongExtTT);
  imp(P::ExactTT, P::Exact);
  imp(P::ExactTT, P::TT);
  imp(P::StrongExactTT, P::FullyExact);
  if (sys.all_surjective()) {
    imp(P::LEO, P::StrongExactTT);
    imp(P::StrongExactTT, P::ExactTT);
    imp(P::LEO, P::TM);
    imp(P::TM, P::TT);
  }
  if (sys.all_injective() && sys.size() >= 2) {
    r.check("lattice", "Exact+injective=>trivial", !v[P::Exact],
            "Exact=" + std::string(v[P::Exact] ? "True" : "False") + " |X|=" + std::to_string(sys.size()));
  }
  return r;
}

Report corollary_checks(const Ndds& sys) {
  Report r("corollary-checks");
  const auto n = sys.size();
  const bool tt = decide(sys, PropertyId::TT, "i").verdict.is_true();
  const bool st = decide(sys, PropertyId::ST, "i").verdict.is_true();
  if (n > kEnumerate) {
    r.add("corollary", "tt-minus-dense", Verdict::unknown(kEnumerate), {}, "subset enumeration limit");
    r.add("corollary", "tt-plus-trivial", Verdict::unknown(kEnumerate), {}, "subset enumeration limit");
    r.add("corollary", "st-minus-dense", Verdict::unknown(kEnumerate), {}, "subset enumeration limit");
    return r;
  }
  std::optional<PointSet> bad_minus, bad_plus;
  for_each_subset(n, [&](const PointSet& a) {
    if (a.is_full()) return;
    if (!bad_minus && check_invariance(sys, a, InvarianceKind::MinusInv).is_true()) bad_minus = a;
    if (!bad_plus && check_invariance(sys, a, InvarianceKind::PlusInv).is_true()) bad_plus = a;
  });
  auto w = [](const std::optional<PointSet>& a) { return a ? "A=" + a->to_string() : std::string{}; };
  r.check("corollary", "tt-minus-dense", !tt || !bad_minus, "TT=" + std::string(tt ? "True " : "False ") + w(bad_minus));
  r.check("corollary", "tt-plus-trivial", !tt || !bad_plus, "TT=" + std::string(tt ? "True " : "False ") + w(bad_plus));
  r.check("corollary", "st-minus-dense", !st || !bad_minus, "ST=" + std::string(st ? "True " : "False ") + w(bad_minus));
  return r;
}

Report orbit_laws(const Ndds& sys) {
  Report r("orbit-laws");
  const auto n = sys.size();
  const auto& tr = sys.trace();

  bool inc = true, inc_neg = true, j_plus = true, j_minus = true, closure = true;
  std::string w1, w2, w3, w4, w5;
  for (Point x = 0; x < n; ++x) {
    auto o = orbit(sys, x).points;
    auto on = negative_orbit(sys, x).points;
    auto j = extended_orbit(sys, x).points;
    auto jn = extended_negative_orbit(sys, x).points;
    if (inc && !o.subset_of(j)) { inc = false; w1 = "x=" + std::to_string(x); }
    if (inc_neg && !on.subset_of(jn)) { inc_neg = false; w2 = "x=" + std::to_string(x); }
    if (j_plus && !check_invariance(sys, j, InvarianceKind::StrongPlusInv).is_true()) {
      j_plus = false;
      w3 = "x=" + std::to_string(x) + " J=" + j.to_string();
    }
    if (j_minus && !check_invariance(sys, jn, InvarianceKind::StrongMinusInv).is_true()) {
      j_minus = false;
      w4 = "x=" + std::to_string(x) + " J-=" + jn.to_string();
    }
    // Closure is the identity on a finite metric space.
    if (closure && (o | omega_limit(sys, x).points) != closure_interior(sys.space(), o).first) {
      closure = false;
      w5 = "x=" + std::to_string(x);
    }
  }
  r.check("orbit", "O<=J", inc, w1);
  r.check("orbit", "O-<=J-", inc_neg, w2);
  r.check("orbit", "J-strong-plus", j_plus, w3);
  r.check("orbit", "J--strong-minus", j_minus, w4);
  r.check("orbit", "closure=O+omega", closure, w5);

  // On a finite space ω(x) = X forces a dense orbit but not conversely, so
  // only the inclusion is asserted for the sequence case.
  auto t = transitive_points(sys);
  auto te = extended_transitive_points(sys);
  r.check("orbit", "T-omega<=T", t.by_omega.subset_of(t.by_definition),
          "def=" + t.by_definition.to_string() + " omega=" + t.by_omega.to_string());
  r.check("orbit", "Te-omega=Te", te.by_omega == te.by_definition,
          "def=" + te.by_definition.to_string() + " omega=" + te.by_omega.to_string());
  r.check("orbit", "T<=Te", t.by_definition.subset_of(te.by_definition),
          "T=" + t.by_definition.to_string() + " Te=" + te.by_definition.to_string());

  // Hitting sets against direct evaluation, and N ⊆ N_e through (1,2,...,m).
  bool hit_ok = true, word_ok = true;
  std::string hw, ww;
  const std::size_t horizon = tr.preperiod() + 2 * tr.cycle();
  std::vector<FiniteMap> words;
  for (std::size_t m = 1; m <= tr.length(); ++m) {
    Word a;
    for (std::size_t i = 1; i <= m; ++i) a.letters.push_back(i);
    words.push_back(sys.word_map(a, WordMode::Position));
  }
  for (Point u = 0; u < n && hit_ok; ++u)
    for (Point v = 0; v < n && hit_ok; ++v) {
      auto us = PointSet::singleton(n, u), vs = PointSet::singleton(n, v);
      auto h = hitting_set(sys, us, vs);
      for (std::size_t m = 1; m <= horizon; ++m) {
        bool direct = sys.iterate(m).image(us).intersects(vs);
        if (h.contains(m) != direct) {
          hit_ok = false;
          hw = "U={" + std::to_string(u) + "} V={" + std::to_string(v) + "} n=" + std::to_string(m);
          break;
        }
      }
    }
  for (std::size_t m = 1; m <= words.size() && word_ok; ++m)
    if (words[m - 1] != tr.iterate(m)) {
      word_ok = false;
      ww = "n=" + std::to_string(m);
    }
  r.check("orbit", "hitset-direct", hit_ok, hw);
  r.check("orbit", "N<=Ne", word_ok, ww);
  return r;
}

}  // namespace transit
