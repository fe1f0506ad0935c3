#include "transit/orbit.hpp"
#include "transit/transitivity.hpp"

#include "transit/error.hpp"

#include <algorithm>
#include <deque>

namespace transit {

bool HitSet::contains(std::size_t n) const {
  if (n < 1) return false;
  if (n <= preperiod.size()) return preperiod[n - 1];
  if (cycle.empty()) return false;
  return cycle[(n - 1 - preperiod.size()) % cycle.size()];
}

bool HitSet::empty() const {
  return std::none_of(preperiod.begin(), preperiod.end(), [](bool b) { return b; }) &&
         std::none_of(cycle.begin(), cycle.end(), [](bool b) { return b; });
}

bool HitSet::infinite() const { return std::any_of(cycle.begin(), cycle.end(), [](bool b) { return b; }); }

bool HitSet::cofinite() const {
  return !cycle.empty() && std::all_of(cycle.begin(), cycle.end(), [](bool b) { return b; });
}

std::optional<std::size_t> HitSet::first() const {
  for (std::size_t n = 1; n <= preperiod.size() + cycle.size(); ++n)
    if (contains(n)) return n;
  return std::nullopt;
}

std::string HitSet::to_string() const {
  std::string s = "pre=";
  for (bool b : preperiod) s += b ? '1' : '0';
  s += " cyc=";
  for (bool b : cycle) s += b ? '1' : '0';
  if (!exact) s += " truncated";
  return s;
}

HitSet hitting_set(const Ndds& sys, const PointSet& u, const PointSet& v) {
  const auto& tr = sys.trace();
  HitSet h;
  for (std::size_t n = 1; n <= tr.length(); ++n) {
    bool hit = tr.iterate(n).image(u).intersects(v);
    (n <= tr.preperiod() ? h.preperiod : h.cycle).push_back(hit);
  }
  return h;
}

HitSet hitting_set(const ShiftNdds& sys, const CylinderSet& u, const CylinderSet& v, std::size_t horizon,
                   std::size_t) {
  HitSet h;
  h.exact = false;
  for (std::size_t n = 1; n <= horizon; ++n) {
    try {
      // f^n(U) ∩ V ≠ ∅ ⇔ U ∩ f^{-n}(V) ≠ ∅, and the preimage is exact.
      h.preperiod.push_back(u.intersects(sys.iterate(n).preimage(v)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::HorizonExceeded) throw;
      break;
    }
  }
  return h;
}

namespace {

struct Alphabet {
  std::vector<std::size_t> letters;  // as written in words
  std::vector<std::size_t> family;   // family index of each letter
  std::vector<bool> recurring;       // letter stands for infinitely many positions
};

Alphabet alphabet_of(const Ndds& sys, WordMode mode) {
  Alphabet a;
  auto rec = sys.sequence().recurring_indices();
  auto reps = sys.representative_positions();
  for (std::size_t j = 0; j < sys.used().size(); ++j) {
    auto fi = sys.used()[j];
    a.letters.push_back(mode == WordMode::Position ? reps[j] : fi + 1);
    a.family.push_back(fi);
    a.recurring.push_back(mode == WordMode::Position && std::binary_search(rec.begin(), rec.end(), fi));
  }
  return a;
}

PointSet reach_closure(const Ndds& sys, const PointSet& from, bool backward) {
  // Points reachable with zero or more steps.
  PointSet seen = from;
  auto pts = from.points();
  std::deque<Point> q(pts.begin(), pts.end());
  while (!q.empty()) {
    Point x = q.front();
    q.pop_front();
    for (auto i : sys.used()) {
      const auto& f = sys.family()[i];
      if (!backward) {
        Point y = f(x);
        if (!seen.contains(y)) { seen.insert(y); q.push_back(y); }
      } else {
        for (Point y = 0; y < sys.size(); ++y)
          if (f(y) == x && !seen.contains(y)) { seen.insert(y); q.push_back(y); }
      }
    }
  }
  return seen;
}

}  // namespace

WordHitSet extended_hitting_set(const Ndds& sys, const PointSet& u, const PointSet& v, std::size_t bound,
                                WordMode mode, std::size_t max_listed) {
  WordHitSet out;
  out.bound = bound;
  const auto alpha = alphabet_of(sys, mode);
  const std::size_t n = sys.size();

  // Shortest witness by BFS over points, at least one letter long.
  std::vector<std::optional<std::pair<Point, std::size_t>>> parent(n);  // (prev point, letter idx)
  std::vector<bool> visited(n, false);
  std::deque<Point> q;
  u.for_each([&](Point x) {
    for (std::size_t j = 0; j < alpha.letters.size(); ++j) {
      Point y = sys.family()[alpha.family[j]](x);
      if (!visited[y]) {
        visited[y] = true;
        parent[y] = std::pair{x, j};
        q.push_back(y);
      }
    }
  });
  // Roots: points reached in one step have parents inside U; mark those
  // parents so the walk back stops there.
  std::vector<bool> root_step(n, false);
  for (Point y = 0; y < n; ++y)
    if (visited[y]) root_step[y] = true;
  std::optional<Point> hit;
  std::vector<Point> order(q.begin(), q.end());
  for (Point y : order)
    if (v.contains(y)) { hit = y; break; }
  while (!hit && !q.empty()) {
    Point x = q.front();
    q.pop_front();
    for (std::size_t j = 0; j < alpha.letters.size(); ++j) {
      Point y = sys.family()[alpha.family[j]](x);
      if (visited[y]) continue;
      visited[y] = true;
      parent[y] = std::pair{x, j};
      q.push_back(y);
      if (v.contains(y)) { hit = y; break; }
    }
  }
  if (hit) {
    out.nonempty = true;
    std::vector<std::size_t> rev;
    Point cur = *hit;
    while (true) {
      auto [p, j] = *parent[cur];
      rev.push_back(alpha.letters[j]);
      if (root_step[cur]) break;
      cur = p;
    }
    out.shortest = Word{{rev.rbegin(), rev.rend()}};
  }

  // Infiniteness: a U→V path through a recurring letter or through a cycle.
  if (out.nonempty) {
    PointSet fwd = reach_closure(sys, u, false);
    PointSet bwd = reach_closure(sys, v, true);
    PointSet mid = fwd & bwd;
    bool inf = false;
    mid.for_each([&](Point x) {
      for (std::size_t j = 0; j < alpha.letters.size() && !inf; ++j) {
        Point y = sys.family()[alpha.family[j]](x);
        if (!bwd.contains(y)) continue;
        if (alpha.recurring[j]) inf = true;
        else if (extended_orbit(sys, x).points.contains(x)) inf = true;
      }
    });
    out.infinite = inf;
  }

  // Listing in length-lex order, with a work cap.
  constexpr std::size_t kMaxNodes = 200000;
  std::size_t nodes = 0;
  std::vector<std::size_t> word;
  auto rec = [&](auto&& self, const PointSet& img, std::size_t len) -> void {
    if (out.words.size() >= max_listed || nodes >= kMaxNodes) return;
    for (std::size_t j = 0; j < alpha.letters.size(); ++j) {
      if (++nodes >= kMaxNodes) return;
      PointSet next = sys.family()[alpha.family[j]].image(img);
      word.push_back(alpha.letters[j]);
      if (word.size() == len) {
        if (next.intersects(v) && out.words.size() < max_listed) out.words.push_back(Word{word});
      } else {
        self(self, next, len);
      }
      word.pop_back();
    }
  };
  for (std::size_t len = 1; len <= bound && !alpha.letters.empty(); ++len) rec(rec, u, len);
  return out;
}

}  // namespace transit
