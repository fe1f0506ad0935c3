#include "transit/harness.hpp"

#include "transit/error.hpp"
#include "transit/invariance.hpp"
#include "transit/orbit.hpp"
#include "transit/transitivity.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace transit {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::string list(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string maps_string(const std::vector<FiniteMap>& maps) {
  std::string s = "[";
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (m) s += "|";
    for (std::size_t i = 0; i < maps[m].size(); ++i) s += (i ? "," : "") + std::to_string(maps[m](static_cast<Point>(i)));
  }
  return s + "]";
}

SequenceSpec random_sequence(Rng& rng, std::size_t family, const RandomOptions& opt) {
  SequenceSpec seq;
  const std::size_t lp = uniform(rng, 0, opt.max_prefix), pp = uniform(rng, 1, opt.max_period);
  for (std::size_t i = 0; i < lp; ++i) seq.prefix.push_back(uniform(rng, 0, family - 1));
  for (std::size_t i = 0; i < pp; ++i) seq.period.push_back(uniform(rng, 0, family - 1));
  return seq;
}

// All tables {0..n-1}^n in lexicographic order.
std::vector<FiniteMap> all_maps(std::size_t n) {
  std::vector<FiniteMap> out;
  std::vector<Point> t(n, 0);
  while (true) {
    out.emplace_back(t);
    std::size_t i = n;
    while (i > 0 && t[i - 1] == n - 1) t[--i] = 0;
    if (i == 0) break;
    ++t[i - 1];
  }
  return out;
}

// Sequences over {0..k-1} of length exactly len.
void sequences(std::size_t k, std::size_t len, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> s(len, 0);
  while (true) {
    out.push_back(s);
    std::size_t i = len;
    while (i > 0 && s[i - 1] == k - 1) s[--i] = 0;
    if (i == 0) break;
    ++s[i - 1];
  }
}

bool uses_all(const SequenceSpec& seq, std::size_t k) { return seq.used_indices().size() == k; }

}  // namespace

// ---------------------------------------------------------------------------
// Generators

std::vector<Ndds> exhaustive_corpus(std::size_t max_points, std::size_t max_maps, std::size_t max_prefix,
                                    std::size_t max_period) {
  std::vector<Ndds> out;
  for (std::size_t n = 1; n <= max_points; ++n) {
    const auto maps = all_maps(n);
    const auto space = FiniteSpace::cyclic(n);
    for (std::size_t k = 1; k <= std::min(max_maps, maps.size()); ++k) {
      std::vector<std::vector<std::size_t>> prefixes, periods;
      for (std::size_t l = 0; l <= max_prefix; ++l) sequences(k, l, prefixes);
      for (std::size_t l = 1; l <= max_period; ++l) sequences(k, l, periods);
      // Families as increasing index tuples into `maps`.
      std::vector<std::size_t> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<FiniteMap> fam;
        for (auto i : idx) fam.push_back(maps[i]);
        for (const auto& pre : prefixes)
          for (const auto& per : periods) {
            SequenceSpec seq{pre, per};
            if (uses_all(seq, k)) out.emplace_back(space, fam, seq);
          }
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == maps.size() - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  return out;
}

FiniteSpace random_space(Rng& rng, std::size_t n) {
  switch (uniform(rng, 0, 2)) {
    case 0: return FiniteSpace::discrete(n);
    case 1: return FiniteSpace::cyclic(n);
    default: break;
  }
  std::vector<long long> pos(3 * n + 1);
  std::iota(pos.begin(), pos.end(), 0);
  std::shuffle(pos.begin(), pos.end(), rng);
  pos.resize(n);
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = Rational(pos[i] > pos[j] ? pos[i] - pos[j] : pos[j] - pos[i]);
  return FiniteSpace(std::move(d));
}

FiniteMap random_map(Rng& rng, std::size_t n, bool permutation) {
  std::vector<Point> t(n);
  if (permutation) {
    std::iota(t.begin(), t.end(), Point{0});
    std::shuffle(t.begin(), t.end(), rng);
  } else {
    for (auto& x : t) x = static_cast<Point>(uniform(rng, 0, n - 1));
  }
  return FiniteMap(std::move(t));
}

Ndds random_ndds(Rng& rng, const RandomOptions& opt) {
  const std::size_t n = uniform(rng, opt.min_points, opt.max_points);
  auto space = random_space(rng, n);
  const std::size_t k = uniform(rng, 1, opt.max_maps);
  std::vector<FiniteMap> fam;
  for (std::size_t i = 0; i < k; ++i) fam.push_back(random_map(rng, n, opt.surjective || coin(rng, opt.permutation_bias)));
  auto seq = random_sequence(rng, k, opt);
  return Ndds(std::move(space), std::move(fam), std::move(seq));
}

PointSet random_subset(Rng& rng, std::size_t n) {
  PointSet s(n);
  for (Point x = 0; x < n; ++x)
    if (coin(rng, 0.5)) s.insert(x);
  return s;
}

MorphismSpec random_quotient(Rng& rng, MorphismMode mode, const RandomOptions& opt) {
  RandomOptions small = opt;
  small.max_points = std::max<std::size_t>(1, opt.max_points / 2);
  small.min_points = 1;
  auto base = random_ndds(rng, small);
  const std::size_t m = base.size();
  const std::size_t n = uniform(rng, m, std::max(m, opt.max_points));

  // π: first m points map onto Y, the rest anywhere.
  std::vector<Point> pi(n);
  for (std::size_t x = 0; x < n; ++x) pi[x] = static_cast<Point>(x < m ? x : uniform(rng, 0, m - 1));
  std::shuffle(pi.begin(), pi.end(), rng);
  std::vector<std::vector<Point>> fiber(m);
  for (std::size_t x = 0; x < n; ++x) fiber[pi[x]].push_back(static_cast<Point>(x));

  std::vector<FiniteMap> fam;
  for (const auto& g : base.family()) {
    std::vector<Point> t(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto& f = fiber[g(pi[x])];
      t[x] = f[uniform(rng, 0, f.size() - 1)];
    }
    fam.emplace_back(std::move(t));
  }
  Ndds domain(random_space(rng, n), std::move(fam), base.sequence());
  return MorphismSpec{std::move(domain), std::move(base), PointMap(std::move(pi), m), mode};
}

Ndds random_commuting(Rng& rng, bool surjective, const RandomOptions& opt) {
  const std::size_t n = uniform(rng, std::max<std::size_t>(opt.min_points, 1), opt.max_points);
  auto f = random_map(rng, n, surjective || coin(rng, opt.permutation_bias));
  const std::size_t k = uniform(rng, 1, std::max<std::size_t>(opt.max_maps, 1));
  std::vector<FiniteMap> fam;
  for (std::size_t i = 0; i < k; ++i) {
    auto g = FiniteMap::identity(n);
    for (std::size_t e = uniform(rng, 0, 3); e > 0; --e) g = compose(f, g);
    fam.push_back(std::move(g));
  }
  auto seq = random_sequence(rng, k, opt);
  return Ndds(random_space(rng, n), std::move(fam), std::move(seq));
}

Rearrangement random_rearrangement(Rng& rng, Rearrangement::Kind kind) {
  Rearrangement r;
  r.kind = kind;
  r.perm.resize(uniform(rng, kind == Rearrangement::Kind::Finite ? 1 : 1, 4));
  std::iota(r.perm.begin(), r.perm.end(), std::size_t{0});
  std::shuffle(r.perm.begin(), r.perm.end(), rng);
  if (kind == Rearrangement::Kind::Block) r.offset = uniform(rng, 0, 2);
  return r;
}

GdsFamily random_gds_family(Rng& rng, std::size_t max_points, std::size_t max_maps) {
  const std::size_t n = uniform(rng, 1, max_points);
  const std::size_t k = uniform(rng, 1, max_maps);
  std::vector<FiniteMap> fam;
  for (std::size_t i = 0; i < k; ++i) fam.push_back(random_map(rng, n, coin(rng, 0.4)));
  return GdsFamily::explicit_family(random_space(rng, n), std::move(fam));
}

std::string describe(const Ndds& sys) {
  return "n=" + std::to_string(sys.size()) + " maps=" + maps_string(sys.family()) +
         " prefix=" + list(sys.sequence().prefix) + " period=" + list(sys.sequence().period);
}

std::string describe(const GdsFamily& f) {
  return "n=" + std::to_string(f.size()) + " members=" + maps_string(f.members()) +
         (f.kind() == GdsFamily::Kind::Iterate ? " iterate" : "");
}

// ---------------------------------------------------------------------------
// Suites per instance

Report instance_suites(const Ndds& sys) {
  Report r("instance");
  const auto n = sys.size();
  const bool surjective = sys.all_surjective();

  for (auto p : kAllProperties) r.append(equivalence_suite(sys, p));
  if (surjective) r.append(vst_open_map_suite(sys));
  r.append(implication_lattice_check(sys));
  r.append(corollary_checks(sys));
  r.append(orbit_laws(sys));

  std::vector<PointSet> subsets;
  if (n <= 3) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) subsets.push_back(PointSet::from_mask(n, m));
  } else {
    subsets.push_back(sys.whole());
    for (Point x = 0; x < n; ++x) {
      auto s = PointSet::singleton(n, x);
      subsets.push_back(s);
      subsets.push_back(s.complement());
      subsets.push_back(orbit(sys, x).points);
    }
  }
  for (const auto& a : subsets) {
    r.append(invariance_laws(sys, a));
    if (surjective) {
      r.append(lemma5_suite(sys, a));
      r.append(lemma6_suite(sys, a));
    }
  }

  r.append(association_suite(sys, surjective));
  r.append(gds_theorem_suites(associate(sys, AssociationMode::Family)));
  try {
    r.append(word_family_suite(sys));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ClosureExceedsBound) throw;
    r.add("word-family", "closure", Verdict::unknown(4096), {}, "closure-bound");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Tally

void Tally::bump(const std::string& key, const Record& r, const std::string& instance) {
  auto [it, fresh] = entries_.try_emplace(key);
  if (fresh) order_.push_back(key);
  auto& e = it->second;
  if (r.verdict.is_false()) {
    if (e.fail++ == 0) e.first_failure = instance + " :: " + r.witness;
  } else if (r.verdict.is_unknown()) {
    ++e.unknown;
  } else {
    ++e.pass;
  }
}

void Tally::add(const Report& r, const std::string& instance) {
  ++instances_;
  for (const auto& rec : r.records()) bump(r.command() + "\t" + rec.property + "\t" + rec.variant, rec, instance);
}

void Tally::add_error(const std::string& suite, const std::string& what, const std::string& instance) {
  ++instances_;
  Record rec{"error", "exception", Verdict::no(), what, {}};
  bump(suite + "\terror\texception", rec, instance);
}

void Tally::merge(const Tally& other) {
  instances_ += other.instances_;
  for (const auto& key : other.order_) {
    const auto& src = other.entries_.at(key);
    auto [it, fresh] = entries_.try_emplace(key);
    if (fresh) order_.push_back(key);
    auto& e = it->second;
    if (e.fail == 0 && src.fail > 0) e.first_failure = src.first_failure;
    e.pass += src.pass;
    e.fail += src.fail;
    e.unknown += src.unknown;
  }
}

std::size_t Tally::failures() const {
  std::size_t f = 0;
  for (const auto& [k, e] : entries_) f += e.fail;
  return f;
}

Report Tally::report(const std::string& command) const {
  Report r(command);
  for (const auto& key : order_) {
    const auto& e = entries_.at(key);
    auto t1 = key.find('\t'), t2 = key.find('\t', t1 + 1);
    std::string suite = key.substr(0, t1), prop = key.substr(t1 + 1, t2 - t1 - 1), var = key.substr(t2 + 1);
    Verdict v = e.fail ? Verdict::no() : Verdict::yes();
    std::string w = "pass=" + std::to_string(e.pass) + " fail=" + std::to_string(e.fail) +
                    " unknown=" + std::to_string(e.unknown);
    if (e.fail) w += " first: " + e.first_failure;
    r.add(suite + ":" + prop, var, v, w);
  }
  return r;
}

Tally run_parallel(std::size_t count, unsigned threads, const std::function<void(std::size_t, Tally&)>& job) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::vector<Tally> parts(threads);
  auto work = [&](unsigned t) {
    const std::size_t lo = count * t / threads, hi = count * (t + 1) / threads;
    for (std::size_t i = lo; i < hi; ++i) job(i, parts[t]);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Tally all;
  for (const auto& p : parts) all.merge(p);
  return all;
}

// ---------------------------------------------------------------------------
// Cross-validation

namespace {

template <class F>
void guarded(Tally& t, const std::string& suite, const std::string& instance, F f) {
  try {
    t.add(f(), instance);
  } catch (const std::exception& e) {
    t.add_error(suite, e.what(), instance);
  }
}

}  // namespace

Report cross_validate(const HarnessOptions& opt) {
  RandomOptions ro;
  ro.max_points = opt.max_points;
  Tally all;

  // Systems.
  std::vector<Ndds> systems;
  if (opt.exhaustive) systems = exhaustive_corpus();
  {
    Rng rng(opt.seed);
    for (std::size_t i = 0; i < opt.samples; ++i) systems.push_back(random_ndds(rng, ro));
  }
  all.merge(run_parallel(systems.size(), opt.threads, [&](std::size_t i, Tally& t) {
    guarded(t, "instance", describe(systems[i]), [&] { return instance_suites(systems[i]); });
  }));

  // Morphisms, products, rearrangements.
  {
    Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<MorphismSpec> morphisms;
    for (auto mode : {MorphismMode::Semi, MorphismMode::Strong})
      for (std::size_t i = 0; i < opt.samples / 2; ++i) morphisms.push_back(random_quotient(rng, mode, ro));
    all.merge(run_parallel(morphisms.size(), opt.threads, [&](std::size_t i, Tally& t) {
      const auto& m = morphisms[i];
      const std::string d = describe(m.domain) + " -> " + describe(m.codomain) + " pi=" + m.pi.to_string();
      guarded(t, "preservation-suite", d, [&] { return preservation_suite(m); });
      guarded(t, "gds-preservation-suite", d, [&] {
        return gds_preservation_suite(GdsMorphism{GdsFamily::iterate_family(m.domain),
                                                  GdsFamily::iterate_family(m.codomain), m.pi, {},
                                                  GdsMorphismMode::StrongSemi});
      });
    }));

    RandomOptions small = ro;
    small.max_points = 3;
    std::vector<std::pair<Ndds, Ndds>> pairs;
    for (std::size_t i = 0; i < opt.samples / 5; ++i) {
      auto a = random_ndds(rng, small);
      auto b = random_ndds(rng, small);
      pairs.emplace_back(std::move(a), std::move(b));
    }
    all.merge(run_parallel(pairs.size(), opt.threads, [&](std::size_t i, Tally& t) {
      guarded(t, "product-suite", describe(pairs[i].first) + " x " + describe(pairs[i].second),
              [&] { return product_suite(pairs[i].first, pairs[i].second); });
    }));

    std::vector<std::pair<Ndds, Rearrangement>> rearr;
    for (auto kind : {Rearrangement::Kind::Finite, Rearrangement::Kind::Block})
      for (std::size_t i = 0; i < opt.samples / 2; ++i) {
        auto sys = random_commuting(rng, kind == Rearrangement::Kind::Block, ro);
        auto rho = random_rearrangement(rng, kind);
        rearr.emplace_back(std::move(sys), std::move(rho));
      }
    all.merge(run_parallel(rearr.size(), opt.threads, [&](std::size_t i, Tally& t) {
      guarded(t, "rearrangement-suite", describe(rearr[i].first) + " rho=" + rearr[i].second.to_string(),
              [&] { return rearrangement_suite(rearr[i].first, rearr[i].second); });
    }));
  }

  // Generic families.
  {
    Rng rng(opt.seed ^ 0xd1b54a32d192ed03ULL);
    struct Job {
      GdsFamily f;
      PointSet a, b;
      Point x;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < opt.samples; ++i) {
      auto f = random_gds_family(rng, 5, 3);
      auto a = random_subset(rng, f.size()), b = random_subset(rng, f.size());
      auto x = static_cast<Point>(uniform(rng, 0, f.size() - 1));
      jobs.push_back({std::move(f), std::move(a), std::move(b), x});
    }
    all.merge(run_parallel(jobs.size(), opt.threads, [&](std::size_t i, Tally& t) {
      const auto& j = jobs[i];
      const auto d = describe(j.f);
      guarded(t, "gds-equations", d, [&] { return gds_equation_checks(j.f, j.a, j.b, j.x); });
      guarded(t, "f-transitive-suite", d, [&] { return f_transitive_suite(j.f, j.a); });
      guarded(t, "gds-theorem-suites", d, [&] { return gds_theorem_suites(j.f); });
      guarded(t, "closure-suite", d, [&] { return closure_suite(j.f); });
    }));
  }

  Report r = all.report("cross-validate seed=" + std::to_string(opt.seed) + " samples=" + std::to_string(opt.samples));
  return r;
}

}  // namespace transit
