#include "transit/transitivity.hpp"

#include "transit/error.hpp"
#include "transit/morphism.hpp"
#include "transit/orbit.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace transit {

std::string_view to_string(PropertyId p) noexcept {
  switch (p) {
    case PropertyId::TT: return "TT";
    case PropertyId::ExtTT: return "ExtTT";
    case PropertyId::ST: return "ST";
    case PropertyId::StrongExtTT: return "StrongExtTT";
    case PropertyId::VST: return "VST";
    case PropertyId::ExtMinimal: return "ExtMinimal";
    case PropertyId::Exact: return "Exact";
    case PropertyId::FullyExact: return "FullyExact";
    case PropertyId::ExactTT: return "ExactTT";
    case PropertyId::StrongExactTT: return "StrongExactTT";
    case PropertyId::TM: return "TM";
    case PropertyId::LEO: return "LEO";
  }
  return "?";
}

PropertyId parse_property(std::string_view s) {
  std::string t;
  for (char c : s)
    if (c != '-' && c != '_') t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (auto p : kAllProperties) {
    std::string name;
    for (char c : to_string(p)) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (t == name) return p;
  }
  throw Error(ErrorCode::UnknownVariant, "unknown property '" + std::string(s) + "'");
}

const std::vector<std::string>& variants(PropertyId p) {
  static const std::map<PropertyId, std::vector<std::string>> table = {
      {PropertyId::TT, {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"}},
      {PropertyId::ExtTT, {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii"}},
      {PropertyId::ST, {"i", "ii", "iii", "iv", "v"}},
      {PropertyId::StrongExtTT, {"i", "ii", "iii", "iv", "v", "vi"}},
      {PropertyId::VST, {"i", "ii"}},
      {PropertyId::ExtMinimal, {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"}},
      {PropertyId::Exact, {"i"}},
      {PropertyId::FullyExact, {"i", "ii"}},
      {PropertyId::ExactTT, {"i"}},
      {PropertyId::StrongExactTT, {"i", "ii", "iii", "iv"}},
      {PropertyId::TM, {"i", "ii", "iii", "iv"}},
      {PropertyId::LEO, {"i", "ii", "iii"}},
  };
  return table.at(p);
}

bool perfect_only(PropertyId p, std::string_view v) {
  if (p != PropertyId::TT && p != PropertyId::ExtTT) return false;
  return v == "iv" || v == "v" || v == "vi";
}

namespace {

std::string set1(Point x) { return "{" + std::to_string(x) + "}"; }
std::string uv(Point u, Point v) { return "U=" + set1(u) + " V=" + set1(v); }

Decision yes(std::string w = {}) { return {Verdict::yes(), std::move(w), std::nullopt}; }
Decision no(std::string w) { return {Verdict::no(), std::move(w), std::nullopt}; }

// Shared per-system data for the finite deciders.
struct Ctx {
  const Ndds& sys;
  std::size_t n;
  const std::vector<FiniteMap>& g;  // g[m-1] = f_1^m, m = 1..s+p
  std::size_t s, p;
  std::vector<Rational> eps;

  explicit Ctx(const Ndds& d)
      : sys(d), n(d.size()), g(d.trace().maps()), s(d.trace().preperiod()), p(d.trace().cycle()),
        eps(d.space().epsilon_grid()) {}

  PointSet one(Point x) const { return PointSet::singleton(n, x); }
  PointSet all() const { return PointSet::full(n); }
  bool eps_dense(const PointSet& a, const Rational& e) const { return is_eps_dense(sys.space(), a, Epsilon(e)); }

  template <class F>
  std::optional<std::pair<Point, Point>> first_failing_pair(F ok) const {
    for (Point u = 0; u < n; ++u)
      for (Point v = 0; v < n; ++v)
        if (!ok(u, v)) return std::pair{u, v};
    return std::nullopt;
  }
  template <class F>
  std::optional<Point> first_failing(F ok) const {
    for (Point u = 0; u < n; ++u)
      if (!ok(u)) return u;
    return std::nullopt;
  }
};

// Transitive closure of the application graph (paths of length >= 1), by
// repeated squaring of the one-step relation.
std::vector<PointSet> reach_matrix(const Ndds& sys) {
  const auto n = sys.size();
  std::vector<PointSet> r(n, PointSet(n));
  for (Point x = 0; x < n; ++x)
    for (auto i : sys.used()) r[x].insert(sys.family()[i](x));
  for (Point k = 0; k < n; ++k)
    for (Point x = 0; x < n; ++x)
      if (r[x].contains(k)) r[x] |= r[k];
  return r;
}

// ∪_{|α| <= L} f_α(A), layer by layer.
std::vector<PointSet> word_image_layers(const Ndds& sys, const PointSet& a, bool backward) {
  std::vector<PointSet> layers;
  PointSet cur = a, acc(sys.size());
  for (std::size_t len = 1; len <= sys.size() + 1; ++len) {
    PointSet next(sys.size());
    for (auto i : sys.used()) next |= backward ? sys.family()[i].preimage(cur) : sys.family()[i].image(cur);
    acc |= next;
    layers.push_back(acc);
    cur = next;
  }
  return layers;
}

// All subsets of X for |X| <= kEnumerate, as masks.
constexpr std::size_t kEnumerate = 16;

template <class F>
std::optional<PointSet> first_subset(std::size_t n, F bad) {
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 1; m < total; ++m) {
    auto a = PointSet::from_mask(n, m);
    if (bad(a)) return a;
  }
  return std::nullopt;
}

bool strong_minus(const Ndds& sys, const PointSet& a) {
  return std::all_of(sys.used().begin(), sys.used().end(),
                     [&](std::size_t i) { return sys.family()[i].preimage(a).subset_of(a); });
}
bool strong_plus(const Ndds& sys, const PointSet& a) {
  return std::all_of(sys.used().begin(), sys.used().end(),
                     [&](std::size_t i) { return sys.family()[i].image(a).subset_of(a); });
}

// Nonempty strong - invariant sets all equal X. Principal sets {x} ∪ J^-(x)
// are the least strong - invariant sets containing x, so they decide the
// question beyond the enumeration limit.
Decision every_strong_minus_is_full(const Ctx& c) {
  if (c.n <= kEnumerate) {
    auto bad = first_subset(c.n, [&](const PointSet& a) { return !a.is_full() && strong_minus(c.sys, a); });
    if (bad) return no("A=" + bad->to_string());
    return yes();
  }
  for (Point x = 0; x < c.n; ++x) {
    auto a = extended_negative_orbit(c.sys, x).points;
    a.insert(x);
    if (!a.is_full()) return no("A=" + a.to_string());
  }
  return yes();
}

// Nonempty strong + invariant sets all equal X.
Decision every_strong_plus_is_full(const Ctx& c, bool enumerate) {
  if (enumerate && c.n <= kEnumerate) {
    auto bad = first_subset(c.n, [&](const PointSet& a) { return !a.is_full() && strong_plus(c.sys, a); });
    if (bad) return no("A=" + bad->to_string());
    return yes();
  }
  for (Point x = 0; x < c.n; ++x) {
    auto a = extended_orbit(c.sys, x).points;
    a.insert(x);
    if (!a.is_full()) return no("A=" + a.to_string());
  }
  return yes();
}

// ∀u ∀ε ∃N: ∪_{m<=N} layer_m(u) is ε-dense, with the layers growing in N.
template <class Layers>
Decision eps_union(const Ctx& c, Layers layers_of, const char* point_name) {
  for (Point u = 0; u < c.n; ++u) {
    auto layers = layers_of(u);
    for (const auto& e : c.eps) {
      bool ok = std::any_of(layers.begin(), layers.end(), [&](const PointSet& s) { return c.eps_dense(s, e); });
      if (!ok) return no(std::string(point_name) + set1(u) + " eps=" + to_string(e));
    }
  }
  return yes();
}

std::vector<PointSet> forward_layers(const Ctx& c, Point u) {
  std::vector<PointSet> out;
  PointSet acc(c.n);
  for (const auto& gm : c.g) {
    acc.insert(gm(u));
    out.push_back(acc);
  }
  return out;
}

std::vector<PointSet> backward_layers(const Ctx& c, Point u) {
  std::vector<PointSet> out;
  PointSet acc(c.n);
  for (const auto& gm : c.g) {
    acc |= gm.preimage(c.one(u));
    out.push_back(acc);
  }
  return out;
}

// ---------------------------------------------------------------------------

Decision decide_tt(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  if (v == "i") {
    auto bad = c.first_failing_pair([&](Point u, Point w) {
      return std::any_of(c.g.begin(), c.g.end(), [&](const FiniteMap& gm) { return gm(u) == w; });
    });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "ii") {
    // f_1^{-n}(U) ∩ V ≠ ∅
    auto bad = c.first_failing_pair([&](Point u, Point w) {
      return std::any_of(c.g.begin(), c.g.end(), [&](const FiniteMap& gm) { return gm.preimage(c.one(u)).contains(w); });
    });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "iii") {
    auto bad = c.first_failing_pair([&](Point u, Point w) { return !hitting_set(sys, c.one(u), c.one(w)).empty(); });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "iv") {
    auto bad = c.first_failing_pair([&](Point u, Point w) { return hitting_set(sys, c.one(u), c.one(w)).infinite(); });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "v") {
    for (Point x = 0; x < c.n; ++x)
      if (orbit(sys, x).points.is_full()) return yes("x=" + std::to_string(x));
    return no("no point has a dense orbit");
  }
  if (v == "vi") {
    auto t = transitive_points(sys).by_definition;
    return t.is_full() ? yes() : no("T=" + t.to_string());
  }
  if (v == "vii") {
    auto bad = c.first_failing([&](Point u) { return forward_union(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "viii") return eps_union(c, [&](Point u) { return forward_layers(c, u); }, "U=");
  if (v == "ix") {
    auto bad = c.first_failing([&](Point u) { return backward_union(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "x") return eps_union(c, [&](Point u) { return backward_layers(c, u); }, "U=");
  throw Error(ErrorCode::UnknownVariant, "TT has no condition '" + std::string(v) + "'");
}

Decision decide_ext_tt(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  if (v == "i") {
    auto r = reach_matrix(sys);
    auto bad = c.first_failing([&](Point u) { return r[u].is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "ii") {
    // f_α^{-1}(U) ∩ V ≠ ∅
    auto bad = c.first_failing_pair(
        [&](Point u, Point w) { return extended_preimage(sys, c.one(u)).contains(w); });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "iii") {
    auto bad = c.first_failing_pair(
        [&](Point u, Point w) { return extended_hitting_set(sys, c.one(u), c.one(w), 0).nonempty; });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "iv") {
    auto bad = c.first_failing_pair(
        [&](Point u, Point w) { return extended_hitting_set(sys, c.one(u), c.one(w), 0).infinite; });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "v") {
    for (Point x = 0; x < c.n; ++x)
      if (extended_orbit(sys, x).points.is_full()) return yes("x=" + std::to_string(x));
    return no("no point has a dense extended orbit");
  }
  if (v == "vi") {
    auto t = extended_transitive_points(sys).by_definition;
    return t.is_full() ? yes() : no("Te=" + t.to_string());
  }
  if (v == "vii") {
    auto bad = c.first_failing([&](Point u) { return extended_image(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "viii") return eps_union(c, [&](Point u) { return word_image_layers(sys, c.one(u), false); }, "U=");
  if (v == "ix") {
    auto bad = c.first_failing([&](Point u) { return extended_preimage(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "x") return eps_union(c, [&](Point u) { return word_image_layers(sys, c.one(u), true); }, "U=");
  if (v == "xi") return every_strong_minus_is_full(c);
  if (v == "xii") {
    // Closed strong + invariant sets are X or nowhere dense, i.e. empty here.
    if (c.n <= kEnumerate) {
      auto bad = first_subset(c.n, [&](const PointSet& a) { return !a.is_full() && strong_plus(sys, a); });
      return bad ? no("A=" + bad->to_string()) : yes();
    }
    for (Point x = 0; x < c.n; ++x) {
      auto a = extended_orbit(sys, x).points;
      a.insert(x);
      if (!a.is_full()) return no("A=" + a.to_string());
    }
    return yes();
  }
  throw Error(ErrorCode::UnknownVariant, "ExtTT has no condition '" + std::string(v) + "'");
}

Decision decide_st(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  if (v == "i") {
    auto bad = c.first_failing([&](Point u) { return forward_union(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "ii") {
    auto bad = c.first_failing_pair([&](Point u, Point x) {
      return std::any_of(c.g.begin(), c.g.end(), [&](const FiniteMap& gm) { return gm.image(c.one(u)).contains(x); });
    });
    return bad ? no("U=" + set1(bad->first) + " x=" + std::to_string(bad->second)) : yes();
  }
  if (v == "iii") {
    auto bad = c.first_failing_pair([&](Point u, Point x) { return !hitting_set(sys, c.one(u), c.one(x)).empty(); });
    return bad ? no("U=" + set1(bad->first) + " x=" + std::to_string(bad->second)) : yes();
  }
  if (v == "iv") {
    auto bad = c.first_failing([&](Point x) { return negative_orbit(sys, x).points.is_full(); });
    return bad ? no("x=" + std::to_string(*bad)) : yes();
  }
  if (v == "v") {
    for (Point x = 0; x < c.n; ++x)
      for (const auto& e : c.eps) {
        bool ok = false;
        for (std::size_t N = 1; N <= c.g.size() && !ok; ++N) ok = c.eps_dense(partial_negative_orbit(sys, x, N), e);
        if (!ok) return no("x=" + std::to_string(x) + " eps=" + to_string(e));
      }
    return yes();
  }
  throw Error(ErrorCode::UnknownVariant, "ST has no condition '" + std::string(v) + "'");
}

Decision decide_strong_ext_tt(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  if (v == "i") {
    auto bad = c.first_failing([&](Point u) { return extended_image(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "ii") {
    auto r = reach_matrix(sys);
    auto bad = c.first_failing_pair([&](Point u, Point x) { return r[u].contains(x); });
    return bad ? no("U=" + set1(bad->first) + " x=" + std::to_string(bad->second)) : yes();
  }
  if (v == "iii") {
    auto bad = c.first_failing_pair(
        [&](Point u, Point x) { return extended_hitting_set(sys, c.one(u), c.one(x), 0).nonempty; });
    return bad ? no("U=" + set1(bad->first) + " x=" + std::to_string(bad->second)) : yes();
  }
  if (v == "iv") {
    auto bad = c.first_failing([&](Point x) { return extended_negative_orbit(sys, x).points.is_full(); });
    return bad ? no("x=" + std::to_string(*bad)) : yes();
  }
  if (v == "v") return eps_union(c, [&](Point x) { return word_image_layers(sys, c.one(x), true); }, "x=");
  if (v == "vi") return every_strong_minus_is_full(c);
  throw Error(ErrorCode::UnknownVariant, "StrongExtTT has no condition '" + std::string(v) + "'");
}

Decision decide_vst(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  if (v == "i") {
    std::size_t k = 0;
    for (Point u = 0; u < c.n; ++u) {
      PointSet acc(c.n);
      std::size_t ku = 0;
      for (std::size_t m = 1; m <= c.g.size(); ++m) {
        acc.insert(c.g[m - 1](u));
        if (acc.is_full()) { ku = m; break; }
      }
      if (!ku) return no("U=" + set1(u));
      k = std::max(k, ku);
    }
    return {Verdict::yes(), "k=" + std::to_string(k), k};
  }
  if (v == "ii") {
    std::size_t worst = 0;
    for (const auto& e : c.eps) {
      std::optional<std::size_t> found;
      for (std::size_t N = 1; N <= c.g.size() && !found; ++N) {
        bool all = true;
        for (Point x = 0; x < c.n && all; ++x) all = c.eps_dense(partial_negative_orbit(sys, x, N), e);
        if (all) found = N;
      }
      if (!found) return no("eps=" + to_string(e));
      worst = std::max(worst, *found);
    }
    return {Verdict::yes(), "N=" + std::to_string(worst), worst};
  }
  throw Error(ErrorCode::UnknownVariant, "VST has no condition '" + std::string(v) + "'");
}

Decision decide_ext_minimal(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  if (v == "i") return every_strong_plus_is_full(c, true);
  if (v == "ii") {
    auto r = reach_matrix(sys);
    auto bad = c.first_failing_pair([&](Point u, Point x) { return r[x].contains(u); });
    return bad ? no("U=" + set1(bad->first) + " x=" + std::to_string(bad->second)) : yes();
  }
  if (v == "iii") {
    auto bad = c.first_failing_pair(
        [&](Point u, Point x) { return extended_hitting_set(sys, c.one(x), c.one(u), 0).nonempty; });
    return bad ? no("U=" + set1(bad->first) + " x=" + std::to_string(bad->second)) : yes();
  }
  if (v == "iv") {
    auto bad = c.first_failing([&](Point x) { return extended_orbit(sys, x).points.is_full(); });
    return bad ? no("x=" + std::to_string(*bad)) : yes();
  }
  if (v == "v") {
    auto t = extended_transitive_points(sys).by_omega;
    return t.is_full() ? yes() : no("Te=" + t.to_string());
  }
  if (v == "vi") {
    auto bad = c.first_failing([&](Point u) { return extended_preimage(sys, c.one(u)).is_full(); });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "vii") {
    // A finite word set suffices: words of length <= |X|.
    auto bad = c.first_failing([&](Point u) {
      auto layers = word_image_layers(sys, c.one(u), true);
      return layers[std::min(c.n, layers.size()) - 1].is_full();
    });
    return bad ? no("U=" + set1(*bad)) : yes();
  }
  if (v == "viii") return every_strong_plus_is_full(c, false);
  throw Error(ErrorCode::UnknownVariant, "ExtMinimal has no condition '" + std::string(v) + "'");
}

Decision decide_exactness(const Ctx& c, PropertyId p, std::string_view v) {
  const auto& sys = c.sys;
  auto meet_union = [&](Point u, Point w) {
    PointSet acc(c.n);
    for (const auto& gm : c.g) acc |= gm.image(c.one(u)) & gm.image(c.one(w));
    return acc;
  };
  switch (p) {
    case PropertyId::Exact: {
      if (v != "i") break;
      auto bad = c.first_failing_pair([&](Point u, Point w) {
        return std::any_of(c.g.begin(), c.g.end(), [&](const FiniteMap& gm) { return gm(u) == gm(w); });
      });
      return bad ? no(uv(bad->first, bad->second)) : yes();
    }
    case PropertyId::FullyExact: {
      if (v == "i") {
        auto bad = c.first_failing_pair([&](Point u, Point w) {
          return std::any_of(c.g.begin(), c.g.end(), [&](const FiniteMap& gm) {
            return !closure_interior(sys.space(), gm.image(c.one(u)) & gm.image(c.one(w))).second.empty();
          });
        });
        return bad ? no(uv(bad->first, bad->second)) : yes();
      }
      if (v == "ii") {
        auto bad = c.first_failing_pair(
            [&](Point u, Point w) { return !closure_interior(sys.space(), meet_union(u, w)).second.empty(); });
        return bad ? no(uv(bad->first, bad->second)) : yes();
      }
      break;
    }
    case PropertyId::ExactTT: {
      if (v != "i") break;
      auto bad = c.first_failing_pair([&](Point u, Point w) { return is_dense(sys.space(), meet_union(u, w)); });
      return bad ? no(uv(bad->first, bad->second)) : yes();
    }
    case PropertyId::StrongExactTT: {
      if (v == "i") {
        auto bad = c.first_failing_pair([&](Point u, Point w) { return meet_union(u, w).is_full(); });
        return bad ? no(uv(bad->first, bad->second)) : yes();
      }
      if (v == "ii" || v == "iii") {
        auto prod = product_discrete(sys, sys);
        const auto& ps = prod.system;
        if (v == "ii") {
          PointSet diag(ps.size());
          for (Point x = 0; x < c.n; ++x) diag.insert(prod.pair(x, x));
          auto bad = c.first_failing_pair([&](Point u, Point w) {
            return diag.subset_of(forward_union(ps, PointSet::singleton(ps.size(), prod.pair(u, w))));
          });
          return bad ? no(uv(bad->first, bad->second)) : yes();
        }
        auto bad = c.first_failing([&](Point x) { return negative_orbit(ps, prod.pair(x, x)).points.is_full(); });
        return bad ? no("x=" + std::to_string(*bad)) : yes();
      }
      if (v == "iv") {
        for (Point x = 0; x < c.n; ++x) {
          auto bad = c.first_failing_pair([&](Point u, Point w) {
            return std::any_of(c.g.begin(), c.g.end(), [&](const FiniteMap& gm) { return gm(u) == x && gm(w) == x; });
          });
          if (bad) return no("x=" + std::to_string(x) + " " + uv(bad->first, bad->second));
        }
        return yes();
      }
      break;
    }
    default: break;
  }
  throw Error(ErrorCode::UnknownVariant, std::string(to_string(p)) + " has no condition '" + std::string(v) + "'");
}

Decision decide_tm(const Ctx& c, std::string_view v) {
  const auto& sys = c.sys;
  const auto cyc = sys.trace().cycle_indices();
  if (v == "i") {
    auto bad = c.first_failing_pair([&](Point u, Point w) {
      return std::all_of(cyc.begin(), cyc.end(), [&](std::size_t m) { return c.g[m - 1](u) == w; });
    });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "ii") {
    auto bad = c.first_failing_pair([&](Point u, Point w) { return hitting_set(sys, c.one(u), c.one(w)).cofinite(); });
    return bad ? no(uv(bad->first, bad->second)) : yes();
  }
  if (v == "iii" || v == "iv") {
    const bool back = v == "iii";
    for (Point u = 0; u < c.n; ++u)
      for (const auto& e : c.eps)
        for (auto m : cyc) {
          auto s = back ? c.g[m - 1].preimage(c.one(u)) : c.g[m - 1].image(c.one(u));
          if (!c.eps_dense(s, e)) return no("U=" + set1(u) + " eps=" + to_string(e) + " n=" + std::to_string(m));
        }
    return yes();
  }
  throw Error(ErrorCode::UnknownVariant, "TM has no condition '" + std::string(v) + "'");
}

Decision decide_leo(const Ctx& c, std::string_view v) {
  const auto cyc = c.sys.trace().cycle_indices();
  if (v == "i") {
    std::size_t k = 0;
    for (Point u = 0; u < c.n; ++u) {
      std::size_t ku = 0;
      for (std::size_t m = 1; m <= c.g.size() && !ku; ++m)
        if (c.g[m - 1].image(c.one(u)).is_full()) ku = m;
      if (!ku) return no("U=" + set1(u));
      k = std::max(k, ku);
    }
    return {Verdict::yes(), "k=" + std::to_string(k), k};
  }
  auto fiber_dense = [&](std::size_t m, const Rational& e) {
    for (Point x = 0; x < c.n; ++x)
      if (!c.eps_dense(c.g[m - 1].preimage(c.one(x)), e)) return false;
    return true;
  };
  if (v == "ii") {
    for (const auto& e : c.eps) {
      bool ok = false;
      for (std::size_t m = 1; m <= c.g.size() && !ok; ++m) ok = fiber_dense(m, e);
      if (!ok) return no("eps=" + to_string(e));
    }
    return yes();
  }
  if (v == "iii") {
    for (const auto& e : c.eps)
      for (auto m : cyc)
        if (!fiber_dense(m, e)) return no("eps=" + to_string(e) + " n=" + std::to_string(m));
    return yes();
  }
  throw Error(ErrorCode::UnknownVariant, "LEO has no condition '" + std::string(v) + "'");
}

}  // namespace

Decision decide(const Ndds& sys, PropertyId p, std::string_view variant, const DecideOptions& opt) {
  if (perfect_only(p, variant) && !opt.allow_imperfect) {
    throw Error(ErrorCode::PerfectSpaceRequired, std::string(to_string(p)) + " condition (" + std::string(variant) +
                                                     ") needs a perfect space; finite spaces are not perfect");
  }
  Ctx c(sys);
  switch (p) {
    case PropertyId::TT: return decide_tt(c, variant);
    case PropertyId::ExtTT: return decide_ext_tt(c, variant);
    case PropertyId::ST: return decide_st(c, variant);
    case PropertyId::StrongExtTT: return decide_strong_ext_tt(c, variant);
    case PropertyId::VST: return decide_vst(c, variant);
    case PropertyId::ExtMinimal: return decide_ext_minimal(c, variant);
    case PropertyId::Exact:
    case PropertyId::FullyExact:
    case PropertyId::ExactTT:
    case PropertyId::StrongExactTT: return decide_exactness(c, p, variant);
    case PropertyId::TM: return decide_tm(c, variant);
    case PropertyId::LEO: return decide_leo(c, variant);
  }
  throw Error(ErrorCode::UnknownVariant, "unknown property");
}

TransitivePoints transitive_points(const Ndds& sys) {
  TransitivePoints t{PointSet(sys.size()), PointSet(sys.size())};
  for (Point x = 0; x < sys.size(); ++x) {
    if (orbit(sys, x).points.is_full()) t.by_definition.insert(x);
    if (omega_limit(sys, x).points.is_full()) t.by_omega.insert(x);
  }
  return t;
}

TransitivePoints extended_transitive_points(const Ndds& sys) {
  TransitivePoints t{PointSet(sys.size()), PointSet(sys.size())};
  for (Point x = 0; x < sys.size(); ++x) {
    if (extended_orbit(sys, x).points.is_full()) t.by_definition.insert(x);
    if (extended_omega_limit(sys, x).points.is_full()) t.by_omega.insert(x);
  }
  return t;
}

}  // namespace transit
