#include "transit/invariance.hpp"

#include "transit/error.hpp"
#include "transit/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace transit {

std::string_view to_string(InvarianceKind k) noexcept {
  switch (k) {
    case InvarianceKind::PlusInv: return "plus";
    case InvarianceKind::StrongPlusInv: return "strong-plus";
    case InvarianceKind::MinusInv: return "minus";
    case InvarianceKind::StrongMinusInv: return "strong-minus";
    case InvarianceKind::WeaklyMinusInv: return "weakly-minus";
    case InvarianceKind::ExtendedMinusInv: return "extended-minus";
    case InvarianceKind::Invariant: return "invariant";
  }
  return "?";
}

InvarianceKind parse_invariance(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != '-' && c != '_') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "plus" || t == "plusinv") return InvarianceKind::PlusInv;
  if (t == "strongplus" || t == "strongplusinv") return InvarianceKind::StrongPlusInv;
  if (t == "minus" || t == "minusinv") return InvarianceKind::MinusInv;
  if (t == "strongminus" || t == "strongminusinv") return InvarianceKind::StrongMinusInv;
  if (t == "weaklyminus" || t == "weaklyminusinv") return InvarianceKind::WeaklyMinusInv;
  if (t == "extendedminus" || t == "extendedminusinv") return InvarianceKind::ExtendedMinusInv;
  if (t == "invariant") return InvarianceKind::Invariant;
  throw Error(ErrorCode::UnknownVariant, "invariance kind '" + std::string(s) + "'");
}

namespace {

template <class Pred>
bool all_iterates(const Ndds& sys, Pred p) {
  const auto& maps = sys.trace().maps();
  return std::all_of(maps.begin(), maps.end(), p);
}

template <class Pred>
bool all_used(const Ndds& sys, Pred p) {
  return std::all_of(sys.used().begin(), sys.used().end(), [&](std::size_t i) { return p(sys.family()[i]); });
}

bool holds(const FiniteMap& f, const PointSet& a, InvarianceKind k) {
  switch (k) {
    case InvarianceKind::PlusInv:
    case InvarianceKind::StrongPlusInv: return f.image(a).subset_of(a);
    case InvarianceKind::MinusInv:
    case InvarianceKind::StrongMinusInv: return f.preimage(a).subset_of(a);
    case InvarianceKind::WeaklyMinusInv:
    case InvarianceKind::ExtendedMinusInv: return a.subset_of(f.image(a));
    case InvarianceKind::Invariant: return f.image(a) == a;
  }
  return false;
}

bool family_kind(InvarianceKind k) {
  return k == InvarianceKind::StrongPlusInv || k == InvarianceKind::StrongMinusInv ||
         k == InvarianceKind::ExtendedMinusInv;
}

// a ⊆ f(a), judged on depth-d cylinders. A cylinder of `a` missing from the
// outer image at some depth is a certain counterexample.
Verdict covered_by_image(const BlockCode& f, const CylinderSet& a, std::size_t max_depth) {
  std::size_t d0 = std::max<std::size_t>(a.depth(), 1);
  for (std::size_t d = d0; d <= std::max(d0, max_depth); ++d)
    if (!a.subset_of(f.image(a, d))) return Verdict::no();
  return Verdict::yes_up_to(std::max(d0, max_depth));
}

Verdict holds(const BlockCode& f, const CylinderSet& a, InvarianceKind k, std::size_t depth) {
  switch (k) {
    case InvarianceKind::PlusInv:
    case InvarianceKind::StrongPlusInv: return Verdict::from(a.subset_of(f.preimage(a)));
    case InvarianceKind::MinusInv:
    case InvarianceKind::StrongMinusInv: return Verdict::from(f.preimage(a).subset_of(a));
    case InvarianceKind::WeaklyMinusInv:
    case InvarianceKind::ExtendedMinusInv: return covered_by_image(f, a, depth);
    case InvarianceKind::Invariant: {
      if (!a.subset_of(f.preimage(a))) return Verdict::no();
      return covered_by_image(f, a, depth);
    }
  }
  return Verdict::no();
}

// Conjunction of bounded verdicts: any False wins, else the weakest True.
void meet(Verdict& acc, const Verdict& v) {
  if (acc.is_false()) return;
  if (v.is_false()) { acc = v; return; }
  if (v.is_unknown()) { acc = v; return; }
  if (acc.is_true() && acc.exact() && !v.exact()) acc = v;
}

}  // namespace

Verdict check_invariance(const Ndds& sys, const PointSet& a, InvarianceKind kind) {
  if (family_kind(kind)) return Verdict::from(all_used(sys, [&](const FiniteMap& f) { return holds(f, a, kind); }));
  return Verdict::from(all_iterates(sys, [&](const FiniteMap& g) { return holds(g, a, kind); }));
}

Verdict check_invariance(const ShiftNdds& sys, const CylinderSet& a, InvarianceKind kind, std::size_t horizon) {
  const std::size_t depth = a.depth() + 4;
  Verdict acc = Verdict::yes();
  if (family_kind(kind)) {
    for (auto i : sys.used()) meet(acc, holds(sys.family()[i], a, kind, depth));
    return acc;
  }
  auto tr = sys.exact_trace(horizon);
  std::size_t last = tr ? tr->first + tr->second : horizon;
  for (std::size_t n = 1; n <= last; ++n) {
    try {
      meet(acc, holds(sys.iterate(n), a, kind, depth));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HorizonExceeded) throw;
      if (!acc.is_false()) acc = Verdict::unknown(n - 1);
      return acc;
    }
    if (acc.is_false()) return acc;
  }
  if (!tr && acc.is_true() && acc.exact()) acc = Verdict::yes_up_to(horizon);
  return acc;
}

std::pair<bool, bool> weakly_minus_inv_characterization(const Ndds& sys, const PointSet& a) {
  bool lhs = check_invariance(sys, a, InvarianceKind::WeaklyMinusInv).is_true();
  bool rhs = all_iterates(sys, [&](const FiniteMap& g) { return g.image(a & g.preimage(a)) == a; });
  return {lhs, rhs};
}

std::pair<bool, bool> extended_minus_inv_characterization(const Ndds& sys, const PointSet& a) {
  bool lhs = check_invariance(sys, a, InvarianceKind::ExtendedMinusInv).is_true();
  bool rhs = all_used(sys, [&](const FiniteMap& f) { return f.image(a & f.preimage(a)) == a; });
  return {lhs, rhs};
}

Report duality_suite(const Ndds& sys, const PointSet& a) {
  Report r("invariance-duality");
  auto c = a.complement();
  auto ck = [&](InvarianceKind x, InvarianceKind y, const char* name) {
    auto l = check_invariance(sys, a, x), rr = check_invariance(sys, c, y);
    r.check("invariance", name, l == rr, "A=" + a.to_string() + " " + l.to_string() + "/" + rr.to_string(),
            "duality");
  };
  ck(InvarianceKind::PlusInv, InvarianceKind::MinusInv, "plus-vs-complement-minus");
  ck(InvarianceKind::StrongPlusInv, InvarianceKind::StrongMinusInv, "strong-plus-vs-complement-strong-minus");
  return r;
}

namespace {

void require_surjective(const Ndds& sys) {
  if (!sys.all_surjective())
    throw Error(ErrorCode::PreconditionViolated, "some map of the sequence is not surjective");
}

bool implies(bool p, bool q) { return !p || q; }

}  // namespace

Report lemma5_suite(const Ndds& sys, const PointSet& a) {
  require_surjective(sys);
  Report r("lemma-minus-invariance");
  const std::string w = "A=" + a.to_string();
  auto inv = [&](InvarianceKind k) { return check_invariance(sys, a, k).is_true(); };
  const bool plus = inv(InvarianceKind::PlusInv), minus = inv(InvarianceKind::MinusInv),
             weak = inv(InvarianceKind::WeaklyMinusInv), full = inv(InvarianceKind::Invariant);
  r.check("invariance", "i", implies(minus, weak), w, "minus=>weakly-minus");
  r.check("invariance", "ii-a", full == (plus && weak), w, "invariant<=>plus-and-weakly-minus");
  const bool fixed = all_iterates(sys, [&](const FiniteMap& g) { return g.preimage(a) == a; });
  r.check("invariance", "ii-b", fixed == (plus && minus), w, "preimage-fixed<=>plus-and-minus");
  r.check("invariance", "ii-c", implies(fixed, full), w, "preimage-fixed=>invariant");
  // Closures and interiors are the sets themselves; both clauses reduce to
  // re-evaluating the property on the same set.
  auto [cl, in] = closure_interior(sys.space(), a);
  r.check("invariance", "iii", implies(plus, check_invariance(sys, cl, InvarianceKind::PlusInv).is_true()) &&
                                   implies(weak, check_invariance(sys, cl, InvarianceKind::WeaklyMinusInv).is_true()) &&
                                   implies(full, check_invariance(sys, cl, InvarianceKind::Invariant).is_true()),
          w, "closure");
  r.check("invariance", "iv", implies(plus, check_invariance(sys, in, InvarianceKind::PlusInv).is_true()) &&
                                  implies(minus, check_invariance(sys, cl, InvarianceKind::MinusInv).is_true()),
          w, "interior-closure");
  return r;
}

Report lemma6_suite(const Ndds& sys, const PointSet& a) {
  require_surjective(sys);
  Report r("lemma-strong-invariance");
  const std::string w = "A=" + a.to_string();
  auto inv = [&](InvarianceKind k) { return check_invariance(sys, a, k).is_true(); };
  const bool splus = inv(InvarianceKind::StrongPlusInv), sminus = inv(InvarianceKind::StrongMinusInv),
             ext = inv(InvarianceKind::ExtendedMinusInv), full = inv(InvarianceKind::Invariant);
  r.check("invariance", "i", implies(sminus, ext), w, "strong-minus=>extended-minus");
  r.check("invariance", "ii-a", full == (splus && ext), w, "invariant<=>strong-plus-and-extended-minus");
  const bool fixed = all_used(sys, [&](const FiniteMap& f) { return f.preimage(a) == a; });
  r.check("invariance", "ii-b", fixed == (splus && sminus), w, "preimage-fixed<=>strong-plus-and-strong-minus");
  r.check("invariance", "ii-c", implies(fixed, full), w, "preimage-fixed=>invariant");
  auto [cl, in] = closure_interior(sys.space(), a);
  r.check("invariance", "iii",
          implies(splus, check_invariance(sys, cl, InvarianceKind::StrongPlusInv).is_true()) &&
              implies(ext, check_invariance(sys, cl, InvarianceKind::ExtendedMinusInv).is_true()) &&
              implies(full, check_invariance(sys, cl, InvarianceKind::Invariant).is_true()),
          w, "closure");
  r.check("invariance", "iv",
          implies(splus, check_invariance(sys, in, InvarianceKind::StrongPlusInv).is_true()) &&
              implies(sminus, check_invariance(sys, cl, InvarianceKind::StrongMinusInv).is_true()),
          w, "interior-closure");
  return r;
}

Report invariance_laws(const Ndds& sys, const PointSet& a) {
  Report r("invariance-laws");
  r.append(duality_suite(sys, a));
  const std::string w = "A=" + a.to_string();
  auto [wl, wr] = weakly_minus_inv_characterization(sys, a);
  r.check("invariance", "weakly-minus-characterization", wl == wr, w);
  auto [el, er] = extended_minus_inv_characterization(sys, a);
  r.check("invariance", "extended-minus-characterization", el == er, w);
  const bool full = check_invariance(sys, a, InvarianceKind::Invariant).is_true();
  r.check("invariance", "invariant-via-family", full == all_used(sys, [&](const FiniteMap& f) { return f.image(a) == a; }),
          w);
  // Strong + invariance is closure under J, strong - invariance under J^-.
  bool jplus = true, jminus = true;
  a.for_each([&](Point y) {
    jplus = jplus && extended_orbit(sys, y).points.subset_of(a);
    jminus = jminus && extended_negative_orbit(sys, y).points.subset_of(a);
  });
  r.check("invariance", "strong-plus-via-extended-orbit",
          jplus == check_invariance(sys, a, InvarianceKind::StrongPlusInv).is_true(), w);
  r.check("invariance", "strong-minus-via-extended-negative-orbit",
          jminus == check_invariance(sys, a, InvarianceKind::StrongMinusInv).is_true(), w);
  // Remark: + invariance is closure under orbits, - invariance under negative orbits.
  bool oplus = true, ominus = true;
  a.for_each([&](Point y) {
    oplus = oplus && orbit(sys, y).points.subset_of(a);
    ominus = ominus && negative_orbit(sys, y).points.subset_of(a);
  });
  r.check("invariance", "plus-via-orbit", oplus == check_invariance(sys, a, InvarianceKind::PlusInv).is_true(), w);
  r.check("invariance", "minus-via-negative-orbit",
          ominus == check_invariance(sys, a, InvarianceKind::MinusInv).is_true(), w);
  return r;
}

}  // namespace transit
