#include "transit/transitivity.hpp"

#include "transit/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace transit {

namespace {

// Iterates g_1..g_m that fit the window budget, m <= horizon.
struct Iterates {
  std::vector<BlockCode> g;
  std::optional<std::pair<std::size_t, std::size_t>> trace;  // exact (s, p) if the sequence repeats
  std::size_t reach() const { return g.size(); }
  // Every n is represented: n in 1..s+p suffices.
  bool exact() const { return trace.has_value() && trace->first + trace->second <= g.size(); }
};

Iterates iterates(const ShiftNdds& sys, std::size_t horizon) {
  Iterates it;
  for (std::size_t n = 1; n <= horizon; ++n) {
    try {
      it.g.push_back(sys.iterate(n));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HorizonExceeded && e.code() != ErrorCode::TooLarge) throw;
      break;
    }
  }
  it.trace = sys.exact_trace(horizon + 1);
  return it;
}

std::vector<Block> cylinders(unsigned k, std::size_t depth) {
  std::vector<Block> out;
  for (std::size_t i = 0; i < leaf_count(k, depth); ++i) out.push_back(block_from_index(i, depth, k));
  return out;
}

std::string cyl(const Block& b) { return "[" + to_string(b) + "]"; }

// Depth-d leaves of g(U) for every depth-d cylinder U, cached per n.
class ImageTable {
 public:
  ImageTable(const ShiftNdds& sys, const Iterates& it, std::size_t depth)
      : it_(it), depth_(depth), k_(sys.alphabet()) {}

  const boost::dynamic_bitset<>& image(std::size_t n, std::size_t u) {
    auto key = std::pair{n, u};
    auto f = cache_.find(key);
    if (f != cache_.end()) return f->second;
    auto U = CylinderSet::cylinder(k_, block_from_index(u, depth_, k_));
    return cache_.emplace(key, it_.g[n - 1].image(U, depth_).leaves(depth_)).first->second;
  }
  bool hits(std::size_t n, std::size_t u, std::size_t v) { return image(n, u).test(v); }

 private:
  const Iterates& it_;
  std::size_t depth_;
  unsigned k_;
  std::map<std::pair<std::size_t, std::size_t>, boost::dynamic_bitset<>> cache_;
};

Decision yes_at(std::size_t h, std::string w = {}) { return {Verdict::yes_up_to(h), std::move(w), std::nullopt}; }
Decision unknown_at(std::size_t h, std::string w = {}) { return {Verdict::unknown(h), std::move(w), std::nullopt}; }
Decision no(std::string w) { return {Verdict::no(), std::move(w), std::nullopt}; }

// With an exact trace the iterates are finitely many continuous maps, so
// small cylinders around a point have images near finitely many points and
// some cylinder is never hit. Searches depths d, d+1, ... for such a pair.
std::optional<std::string> refute_transitivity(const ShiftNdds& sys, const Iterates& it, std::size_t depth) {
  if (!it.exact()) return std::nullopt;
  const unsigned k = sys.alphabet();
  const std::size_t m = it.trace->first + it.trace->second;
  constexpr std::size_t kExtraDepth = 8;
  for (std::size_t D = std::max<std::size_t>(depth, 1); D <= depth + kExtraDepth; ++D) {
    Block x(D, 0);
    auto U = CylinderSet::cylinder(k, x);
    boost::dynamic_bitset<> hit(leaf_count(k, D));
    try {
      for (std::size_t n = 1; n <= m; ++n) hit |= it.g[n - 1].image(U, D).leaves(D);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      return std::nullopt;
    }
    if (hit.all()) continue;
    std::size_t v = 0;
    while (hit.test(v)) ++v;
    return "U=" + cyl(x) + " V=" + cyl(block_from_index(v, D, k));
  }
  return std::nullopt;
}

// ε = 2^-e for e = 0..depth, the symbolic ε grid at this depth.
std::vector<Epsilon> shift_grid(std::size_t depth) {
  std::vector<Epsilon> out;
  for (std::size_t e = 0; e <= depth; ++e) out.emplace_back(Rational(1, std::int64_t{1} << e));
  return out;
}

// A point whose first symbols run through a de Bruijn sequence of order d,
// so that shifted windows pass through every depth-d block.
Block de_bruijn_point(unsigned k, std::size_t d, std::size_t length) {
  Block seq;
  std::vector<Symbol> a(k * d + 1, 0);
  std::function<void(std::size_t, std::size_t)> db = [&](std::size_t t, std::size_t p) {
    if (t > d) {
      if (d % p == 0)
        for (std::size_t j = 1; j <= p; ++j) seq.push_back(a[j]);
      return;
    }
    a[t] = a[t - p];
    db(t + 1, p);
    for (Symbol j = a[t - p] + 1; j < k; ++j) {
      a[t] = j;
      db(t + 1, t);
    }
  };
  if (d == 0) seq.push_back(0);
  else db(1, 1);
  Block x{0};
  while (x.size() < length) x.push_back(seq[(x.size() - 1) % seq.size()]);
  return x;
}

// ---------------------------------------------------------------------------

Decision tt(const ShiftNdds& sys, std::string_view v, const SymbolicConfig& cfg) {
  const unsigned k = sys.alphabet();
  const std::size_t d = cfg.depth;
  auto it = iterates(sys, cfg.horizon);
  const std::size_t H = it.reach();
  if (auto w = refute_transitivity(sys, it, d)) return no(*w);
  if (H == 0) return unknown_at(0, "no iterate fits the window budget");
  const std::size_t C = leaf_count(k, d);
  ImageTable table(sys, it, d);

  auto all_pairs = [&](auto pred) -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (std::size_t u = 0; u < C; ++u)
      for (std::size_t w = 0; w < C; ++w)
        if (!pred(u, w)) return std::pair{u, w};
    return std::nullopt;
  };
  auto pair_str = [&](std::pair<std::size_t, std::size_t> p) {
    return "U=" + cyl(block_from_index(p.first, d, k)) + " V=" + cyl(block_from_index(p.second, d, k));
  };
  auto verdict_pairs = [&](std::optional<std::pair<std::size_t, std::size_t>> bad) {
    if (!bad) return yes_at(H);
    if (it.exact()) return no(pair_str(*bad));
    return unknown_at(H, pair_str(*bad));
  };

  if (v == "i") {
    return verdict_pairs(all_pairs([&](std::size_t u, std::size_t w) {
      for (std::size_t n = 1; n <= H; ++n)
        if (table.hits(n, u, w)) return true;
      return false;
    }));
  }
  if (v == "ii") {
    // f_1^{-n}(U) ∩ V
    return verdict_pairs(all_pairs([&](std::size_t u, std::size_t w) {
      auto U = CylinderSet::cylinder(k, block_from_index(u, d, k));
      auto V = CylinderSet::cylinder(k, block_from_index(w, d, k));
      for (std::size_t n = 1; n <= H; ++n)
        if (it.g[n - 1].preimage(U).intersects(V)) return true;
      return false;
    }));
  }
  if (v == "iii" || v == "iv") {
    const bool infinite = v == "iv";
    // Infinitely many hits: exactly a hit on the cycle when the trace is
    // known, otherwise a hit in the second half of the horizon as evidence.
    const std::size_t lo = it.exact() ? it.trace->first + 1 : H / 2 + 1;
    const std::size_t hi = it.exact() ? it.trace->first + it.trace->second : H;
    auto bad = all_pairs([&](std::size_t u, std::size_t w) {
      auto U = CylinderSet::cylinder(k, block_from_index(u, d, k));
      auto V = CylinderSet::cylinder(k, block_from_index(w, d, k));
      auto h = hitting_set(sys, U, V, H, d);
      if (!infinite) return !h.empty();
      for (std::size_t n = lo; n <= hi; ++n)
        if (h.contains(n)) return true;
      return false;
    });
    return verdict_pairs(bad);
  }
  if (v == "v") {
    std::size_t need = d;
    for (const auto& g : it.g) need = std::max(need, d + g.window() - 1);
    auto x = de_bruijn_point(k, d, need);
    boost::dynamic_bitset<> seen(C);
    for (std::size_t n = 1; n <= H; ++n) {
      auto y = it.g[n - 1].apply(x);
      y.resize(d);
      seen.set(block_index(y, k));
    }
    if (seen.all()) return yes_at(H, "x=" + to_string(x));
    return unknown_at(H, "no dense-orbit witness found");
  }
  if (v == "vi") return unknown_at(H, "residuality of transitive points is not checked symbolically");
  if (v == "vii" || v == "viii") {
    const bool eps = v == "viii";
    auto grid = shift_grid(d);
    for (std::size_t u = 0; u < C; ++u) {
      boost::dynamic_bitset<> acc(C);
      for (std::size_t n = 1; n <= H; ++n) acc |= table.image(n, u);
      auto s = CylinderSet::from_leaves(k, d, acc);
      bool ok = eps ? std::all_of(grid.begin(), grid.end(), [&](const Epsilon& e) { return is_eps_dense(sys.space(), s, e); })
                    : acc.all();
      if (!ok) {
        std::string w = "U=" + cyl(block_from_index(u, d, k));
        return it.exact() ? no(w) : unknown_at(H, w);
      }
    }
    return yes_at(H);
  }
  if (v == "ix" || v == "x") {
    const bool eps = v == "x";
    auto grid = shift_grid(d);
    for (std::size_t u = 0; u < C; ++u) {
      auto U = CylinderSet::cylinder(k, block_from_index(u, d, k));
      CylinderSet acc(k);
      for (std::size_t n = 1; n <= H; ++n) acc = acc | it.g[n - 1].preimage(U);
      bool ok = eps ? std::all_of(grid.begin(), grid.end(), [&](const Epsilon& e) { return is_eps_dense(sys.space(), acc, e); })
                    : is_eps_dense(sys.space(), acc, grid.back());
      if (!ok) {
        std::string w = "U=" + cyl(block_from_index(u, d, k));
        return it.exact() ? no(w) : unknown_at(H, w);
      }
    }
    return yes_at(H);
  }
  throw Error(ErrorCode::UnknownVariant, "TT has no condition '" + std::string(v) + "'");
}

// Per-cylinder coverage f(U) = X through covers_everything.
struct Coverage {
  bool all = true;
  std::size_t k = 0;  // max over U of the least covering n
  std::optional<Block> failing;
};

Coverage cover(const ShiftNdds& sys, const Iterates& it, std::size_t depth) {
  Coverage c;
  for (const auto& b : cylinders(sys.alphabet(), depth)) {
    std::size_t found = 0;
    for (std::size_t n = 1; n <= it.reach() && !found; ++n)
      if (covers_everything(it.g[n - 1], b)) found = n;
    if (!found) {
      c.all = false;
      c.failing = b;
      return c;
    }
    c.k = std::max(c.k, found);
  }
  return c;
}

Decision covering(const ShiftNdds& sys, PropertyId p, const SymbolicConfig& cfg) {
  auto it = iterates(sys, cfg.horizon);
  const std::size_t H = it.reach();
  if (auto w = refute_transitivity(sys, it, cfg.depth)) return no("not transitive: " + *w);
  auto c = cover(sys, it, cfg.depth);
  if (c.all) {
    Decision d = yes_at(H, "k=" + std::to_string(c.k));
    if (p != PropertyId::ST) d.k = c.k;
    return d;
  }
  std::string w = "U=" + cyl(*c.failing);
  if (p == PropertyId::LEO && it.exact()) return no(w);
  return unknown_at(H, w);
}

Decision mixing(const ShiftNdds& sys, const SymbolicConfig& cfg) {
  const unsigned k = sys.alphabet();
  const std::size_t d = cfg.depth;
  auto it = iterates(sys, cfg.horizon);
  const std::size_t H = it.reach();
  if (auto w = refute_transitivity(sys, it, d)) return no("not transitive: " + *w);
  if (H == 0) return unknown_at(0);
  ImageTable table(sys, it, d);
  const std::size_t C = leaf_count(k, d);
  const std::size_t from = (H + 1) / 2;
  for (std::size_t u = 0; u < C; ++u)
    for (std::size_t n = std::max<std::size_t>(from, 1); n <= H; ++n) {
      const auto& img = table.image(n, u);
      if (!img.all()) {
        std::size_t v = 0;
        while (img.test(v)) ++v;
        return unknown_at(H, "U=" + cyl(block_from_index(u, d, k)) + " V=" + cyl(block_from_index(v, d, k)) +
                                 " n=" + std::to_string(n));
      }
    }
  return yes_at(H, "hits for n=" + std::to_string(from) + ".." + std::to_string(H));
}

Decision exactness(const ShiftNdds& sys, const SymbolicConfig& cfg) {
  const unsigned k = sys.alphabet();
  const std::size_t d = cfg.depth;
  auto it = iterates(sys, cfg.horizon);
  const std::size_t H = it.reach();
  auto blocks = cylinders(k, d);
  std::size_t tested = H;
  for (std::size_t a = 0; a < blocks.size(); ++a)
    for (std::size_t b = a + 1; b < blocks.size(); ++b) {
      bool met = false;
      for (std::size_t n = 1; n <= H && !met; ++n) {
        try {
          met = images_meet(it.g[n - 1], blocks[a], blocks[b]);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::TooLarge) throw;
          tested = std::min(tested, n - 1);
          break;
        }
      }
      if (!met) {
        std::string w = "U=" + cyl(blocks[a]) + " V=" + cyl(blocks[b]);
        if (it.exact() && tested >= it.trace->first + it.trace->second) return no(w);
        return unknown_at(tested, w);
      }
    }
  return yes_at(H);
}

// Word maps over the used family up to length L, composed incrementally.
std::vector<std::pair<Word, BlockCode>> word_maps(const ShiftNdds& sys, std::size_t L) {
  std::vector<std::pair<Word, BlockCode>> out, frontier;
  auto used = sys.used();
  frontier.push_back({Word{}, BlockCode::identity(sys.alphabet())});
  for (std::size_t len = 1; len <= L; ++len) {
    std::vector<std::pair<Word, BlockCode>> next;
    for (const auto& [w, f] : frontier)
      for (auto i : used) {
        try {
          Word w2 = w;
          w2.letters.push_back(i + 1);
          next.push_back({w2, compose(sys.family()[i], f, sys.max_window()).minimized()});
        } catch (const Error& e) {
          if (e.code() != ErrorCode::HorizonExceeded && e.code() != ErrorCode::TooLarge) throw;
        }
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

constexpr std::size_t kMaxWordLength = 6;

Decision extended(const ShiftNdds& sys, PropertyId p, const SymbolicConfig& cfg) {
  const unsigned k = sys.alphabet();
  const std::size_t d = cfg.depth;
  const std::size_t L = std::min(cfg.horizon, kMaxWordLength);
  auto maps = word_maps(sys, L);
  auto blocks = cylinders(k, d);
  if (p == PropertyId::ExtTT) {
    std::vector<boost::dynamic_bitset<>> img;
    for (const auto& b : blocks) {
      boost::dynamic_bitset<> acc(blocks.size());
      for (const auto& [w, f] : maps) acc |= f.image(CylinderSet::cylinder(k, b), d).leaves(d);
      if (!acc.all()) {
        std::size_t v = 0;
        while (acc.test(v)) ++v;
        return unknown_at(L, "U=" + cyl(b) + " V=" + cyl(blocks[v]));
      }
    }
    return yes_at(L);
  }
  // StrongExtTT: some word maps each cylinder onto X.
  std::size_t longest = 0;
  for (const auto& b : blocks) {
    auto f = std::find_if(maps.begin(), maps.end(), [&](const auto& m) { return covers_everything(m.second, b); });
    if (f == maps.end()) return unknown_at(L, "U=" + cyl(b));
    longest = std::max(longest, f->first.letters.size());
  }
  return yes_at(L, "word length <= " + std::to_string(longest));
}

}  // namespace

Decision decide(const ShiftNdds& sys, PropertyId p, std::string_view variant, const SymbolicConfig& cfg) {
  const auto& vs = variants(p);
  if (std::find(vs.begin(), vs.end(), variant) == vs.end()) {
    throw Error(ErrorCode::UnknownVariant,
                std::string(to_string(p)) + " has no condition '" + std::string(variant) + "'");
  }
  if (p == PropertyId::TT) return tt(sys, variant, cfg);
  if (variant != "i") return unknown_at(cfg.horizon, "condition not evaluated on the symbolic backend");
  switch (p) {
    case PropertyId::ST:
    case PropertyId::VST:
    case PropertyId::LEO: return covering(sys, p, cfg);
    case PropertyId::TM: return mixing(sys, cfg);
    case PropertyId::Exact: return exactness(sys, cfg);
    case PropertyId::ExtTT:
    case PropertyId::StrongExtTT: return extended(sys, p, cfg);
    default: return unknown_at(cfg.horizon, "property not evaluated on the symbolic backend");
  }
}

Report equivalence_suite(const ShiftNdds& sys, PropertyId p, const SymbolicConfig& cfg) {
  Report r("equivalence-suite");
  const std::string name(to_string(p));
  std::vector<std::pair<std::string, Decision>> d;
  for (const auto& v : variants(p)) d.emplace_back(v, decide(sys, p, v, cfg));
  // Bounded checks: a True/False clash between any two conditions is a
  // failure; Unknown is tolerated.
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      const auto& [va, da] = d[a];
      const auto& [vb, db] = d[b];
      std::string w = va + "=" + da.verdict.to_string() + " " + vb + "=" + db.verdict.to_string();
      r.check(name, va + "~" + vb, !da.verdict.contradicts(db.verdict), w);
    }
  if (d.size() == 1) r.add(name, "i", d[0].second.verdict, d[0].second.witness);
  return r;
}

}  // namespace transit
