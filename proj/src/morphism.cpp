#include "transit/morphism.hpp"

#include "transit/error.hpp"
#include "transit/transitivity.hpp"

#include <algorithm>
#include <numeric>

namespace transit {

std::string_view to_string(MorphismMode m) noexcept {
  return m == MorphismMode::Semi ? "semiconjugacy" : "strong-semiconjugacy";
}

namespace {

bool intertwines(const PointMap& pi, const FiniteMap& f, const FiniteMap& g) {
  for (Point x = 0; x < pi.domain(); ++x)
    if (pi(f(x)) != g(pi(x))) return false;
  return true;
}

bool semi_holds(const MorphismSpec& m) {
  const auto& ta = m.domain.trace();
  const auto& tb = m.codomain.trace();
  const std::size_t range = std::max(ta.preperiod(), tb.preperiod()) + std::lcm(ta.cycle(), tb.cycle());
  for (std::size_t n = 1; n <= range; ++n)
    if (!intertwines(m.pi, m.domain.iterate(n), m.codomain.iterate(n))) return false;
  return true;
}

bool strong_holds(const MorphismSpec& m) {
  const auto& sa = m.domain.sequence();
  const auto& sb = m.codomain.sequence();
  const std::size_t range =
      std::max(sa.prefix.size(), sb.prefix.size()) + std::lcm(sa.period.size(), sb.period.size());
  for (std::size_t n = 1; n <= range; ++n)
    if (!intertwines(m.pi, m.domain.map_at(n), m.codomain.map_at(n))) return false;
  return true;
}

bool has(const Ndds& sys, PropertyId p) { return decide(sys, p, "i").verdict.is_true(); }

std::string tf(bool b) { return b ? "True" : "False"; }

}  // namespace

Verdict verify_morphism(const MorphismSpec& m) {
  if (m.pi.domain() != m.domain.size() || m.pi.codomain != m.codomain.size()) {
    throw Error(ErrorCode::InvalidMap, "pi must map the " + std::to_string(m.domain.size()) + "-point domain onto the " +
                                           std::to_string(m.codomain.size()) + "-point codomain");
  }
  if (!m.pi.is_surjective()) throw Error(ErrorCode::PiNotSurjective, "pi " + m.pi.to_string() + " is not onto");
  if (m.mode == MorphismMode::Semi) return Verdict::from(semi_holds(m));
  return Verdict::from(strong_holds(m) && semi_holds(m));
}

Report preservation_suite(const MorphismSpec& m) {
  if (!verify_morphism(m).is_true()) {
    throw Error(ErrorCode::InvalidMorphism, "pi does not intertwine the systems as a " + std::string(to_string(m.mode)));
  }
  Report r("preservation-suite");
  using P = PropertyId;
  std::vector<P> props{P::TT, P::ST, P::VST, P::ExactTT, P::StrongExactTT, P::Exact, P::LEO};
  if (m.mode == MorphismMode::Strong) {
    props.push_back(P::ExtTT);
    props.push_back(P::StrongExtTT);
    r.check("morphism", "strong=>semi", semi_holds(m));
  }
  for (auto p : props) {
    bool a = has(m.domain, p), b = has(m.codomain, p);
    r.check("preserve", std::string(to_string(p)), !a || b, "domain=" + tf(a) + " codomain=" + tf(b),
            std::string(to_string(m.mode)));
  }
  return r;
}

Report product_suite(const Ndds& a, const Ndds& b) {
  Report r("product-suite");
  auto ps = product(a, b);
  const auto& prod = ps.system;
  r.check("product", "proj-left", verify_morphism({prod, a, ps.proj_left, MorphismMode::Strong}).is_true(),
          ps.proj_left.to_string());
  r.check("product", "proj-right", verify_morphism({prod, b, ps.proj_right, MorphismMode::Strong}).is_true(),
          ps.proj_right.to_string());

  using P = PropertyId;
  std::map<P, bool> va, vb, vp;
  for (auto p : kAllProperties) {
    va[p] = has(a, p);
    vb[p] = has(b, p);
    vp[p] = has(prod, p);
  }
  auto w = [&](P p) { return "A=" + tf(va[p]) + " B=" + tf(vb[p]) + " AxB=" + tf(vp[p]); };

  for (auto p : {P::ST, P::VST, P::ExactTT, P::StrongExactTT, P::Exact, P::LEO})
    r.check("factor", std::string(to_string(p)), !vp[p] || (va[p] && vb[p]), w(p));

  r.check("mixing", "B-TM&A-TT=>TT", !(vb[P::TM] && va[P::TT]) || vp[P::TT],
          "B.TM=" + tf(vb[P::TM]) + " " + w(P::TT));
  r.check("mixing", "B-TM&A-TM=>TM", !(vb[P::TM] && va[P::TM]) || vp[P::TM], w(P::TM));

  for (auto p : {P::ST, P::VST, P::Exact, P::FullyExact, P::ExactTT, P::StrongExactTT, P::LEO})
    r.check("leo-factor", std::string(to_string(p)), !(vb[P::LEO] && va[p]) || vp[p],
            "B.LEO=" + tf(vb[P::LEO]) + " " + w(p));
  return r;
}

// ---------------------------------------------------------------------------
// Rearrangements

void Rearrangement::validate() const {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw Error(ErrorCode::InvalidSequence, "rearrangement " + to_string() + " is not a permutation");
    seen[p] = true;
  }
  if (kind == Kind::Block && perm.empty()) throw Error(ErrorCode::InvalidSequence, "block rearrangement needs a nonempty block");
}

std::size_t Rearrangement::apply(std::size_t n) const {
  if (n < 1) throw Error(ErrorCode::InvalidIndex, "positions start at 1");
  if (kind == Kind::Finite) return n <= perm.size() ? perm[n - 1] + 1 : n;
  if (n <= offset) return n;
  const std::size_t B = perm.size();
  const std::size_t j = n - offset - 1;
  return offset + (j / B) * B + perm[j % B] + 1;
}

std::string Rearrangement::to_string() const {
  std::string s = kind == Kind::Finite ? "finite[" : "block[";
  for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm[i]);
  s += "]";
  if (kind == Kind::Block) s += " offset=" + std::to_string(offset);
  return s;
}

Ndds rearranged(const Ndds& sys, const Rearrangement& rho) {
  rho.validate();
  const auto& seq = sys.sequence();
  const std::size_t L = seq.prefix.size(), P = seq.period.size();
  std::size_t T = 0, period = P;
  if (rho.kind == Rearrangement::Kind::Finite) {
    T = std::max(L, rho.perm.size());
  } else {
    const std::size_t B = rho.perm.size();
    T = rho.offset;
    while (T < L) T += B;
    period = std::lcm(B, P);
  }
  SequenceSpec out;
  for (std::size_t n = 1; n <= T; ++n) out.prefix.push_back(seq.index_at(rho.apply(n)));
  for (std::size_t n = T + 1; n <= T + period; ++n) out.period.push_back(seq.index_at(rho.apply(n)));
  return Ndds(sys.space(), sys.family(), std::move(out));
}

bool commuting_family(const Ndds& sys) {
  const auto& f = sys.family();
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      if (compose(f[i], f[j]) != compose(f[j], f[i])) return false;
  return true;
}

Report rearrangement_suite(const Ndds& sys, const Rearrangement& rho) {
  if (!commuting_family(sys)) throw Error(ErrorCode::MapsDoNotCommute, "family maps do not commute pairwise");
  rho.validate();
  const bool finite = rho.kind == Rearrangement::Kind::Finite;
  if (!finite && !sys.all_surjective()) {
    throw Error(ErrorCode::NotSurjective, "rearrangements beyond finite ones need surjective maps");
  }
  Report r("rearrangement-suite");
  auto g = rearranged(sys, rho);
  const std::string tag = rho.to_string();

  if (finite) {
    for (auto p : {PropertyId::TT, PropertyId::TM}) {
      bool a = has(sys, p), b = has(g, p);
      r.check("rearrange", std::string(to_string(p)), !a || b, "f=" + tf(a) + " g=" + tf(b), tag);
    }
    // f_1^k = g_1^k for k >= N, over a range that covers both traces.
    const std::size_t N = std::max<std::size_t>(rho.identity_from(), 1);
    const std::size_t span = std::max(sys.trace().length(), g.trace().length()) + 1;
    bool same = true;
    std::string w;
    for (std::size_t k = N; k <= N + span && same; ++k)
      if (sys.iterate(k) != g.iterate(k)) {
        same = false;
        w = "k=" + std::to_string(k);
      }
    r.check("rearrange", "iterates-agree", same, w, tag);
  }
  if (sys.all_surjective()) {
    bool a = has(sys, PropertyId::LEO), b = has(g, PropertyId::LEO);
    r.check("rearrange", "LEO", !a || b, "f=" + tf(a) + " g=" + tf(b), tag);
  }
  return r;
}

}  // namespace transit
