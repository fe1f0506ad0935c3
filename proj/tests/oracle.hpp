#pragma once

// Brute-force reference implementations used as test oracles. They share
// nothing with the library deciders beyond FiniteMap/PointSet storage: maps
// are iterated naively up to a bound past any preperiod plus cycle, and open
// sets range over every nonempty subset instead of singletons.

#include "transit/system.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace oracle {

using transit::FiniteMap;
using transit::Ndds;
using transit::Point;
using transit::PointSet;

inline std::vector<Point> after(const std::vector<Point>& f, const std::vector<Point>& g) {
  // f ∘ g
  std::vector<Point> r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[g[i]];
  return r;
}

// The pair (f_1^n, phase) lives in a set of size n^n * |period|, so the
// sequence of iterates is periodic from prefix + that bound on.
inline std::size_t bound(const Ndds& sys) {
  std::size_t m = 1;
  for (std::size_t i = 0; i < sys.size(); ++i) m *= sys.size();
  return 2 * (sys.sequence().prefix.size() + sys.sequence().period.size() * m) + 4;
}

// g[n-1] = f_1^n as a table, n = 1..B.
inline std::vector<std::vector<Point>> iterates(const Ndds& sys, std::size_t B) {
  const auto& seq = sys.sequence();
  std::vector<std::vector<Point>> out;
  std::vector<Point> g(sys.size());
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<Point>(i);
  for (std::size_t n = 1; n <= B; ++n) {
    std::size_t idx = n <= seq.prefix.size() ? seq.prefix[n - 1]
                                             : seq.period[(n - 1 - seq.prefix.size()) % seq.period.size()];
    g = oracle::after(sys.family()[idx].table(), g);
    out.push_back(g);
  }
  return out;
}

inline std::uint64_t image(const std::vector<Point>& g, std::uint64_t u) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (u >> i & 1) r |= std::uint64_t{1} << g[i];
  return r;
}

inline std::uint64_t full(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

// Everything reachable from U by compositions of length >= 1 over the used maps.
inline std::uint64_t word_reach(const Ndds& sys, std::uint64_t u) {
  std::uint64_t seen = 0, frontier = u;
  bool first = true;
  while (first || frontier) {
    std::uint64_t next = 0;
    for (auto i : sys.used()) next |= image(sys.family()[i].table(), first ? u : frontier);
    first = false;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

struct Facts {
  bool tt = true, ext_tt = true, st = true, strong_ext_tt = true, vst = true, ext_minimal = true;
  bool exact = true, fully_exact = true, exact_tt = true, strong_exact_tt = true, tm = true, leo = true;
};

inline Facts facts(const Ndds& sys) {
  const std::size_t n = sys.size();
  const std::size_t B = bound(sys);
  const auto g = iterates(sys, B);
  const std::uint64_t X = full(n);
  Facts f;
  for (std::uint64_t u = 1; u <= X; ++u) {
    std::uint64_t uni = 0;
    bool onto = false;
    for (const auto& h : g) {
      auto im = image(h, u);
      uni |= im;
      onto = onto || im == X;
    }
    f.st = f.st && uni == X;
    f.vst = f.vst && uni == X;  // the union over n <= B already stabilized
    f.leo = f.leo && onto;
    f.strong_ext_tt = f.strong_ext_tt && word_reach(sys, u) == X;
    for (std::uint64_t v = 1; v <= X; ++v) {
      bool hit = false, tail = true, meet = false;
      std::uint64_t both = 0;
      for (std::size_t k = 0; k < B; ++k) {
        auto gu = image(g[k], u);
        bool h = (gu & v) != 0;
        hit = hit || h;
        if (k + 1 > B / 2) tail = tail && h;
        auto gv = image(g[k], v);
        meet = meet || (gu & gv) != 0;
        both |= gu & gv;
      }
      f.tt = f.tt && hit;
      f.tm = f.tm && tail;
      f.exact = f.exact && meet;
      f.fully_exact = f.fully_exact && meet;  // interiors are the sets themselves
      f.exact_tt = f.exact_tt && both == X;
      f.strong_exact_tt = f.strong_exact_tt && both == X;
      f.ext_tt = f.ext_tt && (word_reach(sys, u) & v) != 0;
    }
  }
  // No proper nonempty A with f_n(A) ⊆ A for every used map.
  for (std::uint64_t a = 1; a < X; ++a) {
    bool inv = true;
    for (auto i : sys.used()) inv = inv && (image(sys.family()[i].table(), a) & ~a) == 0;
    if (inv) f.ext_minimal = false;
  }
  return f;
}

// Every nonempty subset of {0..n-1} as a PointSet.
inline std::vector<PointSet> subsets(std::size_t n, bool include_empty = false) {
  std::vector<PointSet> out;
  for (std::uint64_t m = include_empty ? 0 : 1; m < (std::uint64_t{1} << n); ++m)
    out.push_back(PointSet::from_mask(n, m));
  return out;
}

}  // namespace oracle
