#include "transit/error.hpp"
#include "transit/system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace transit {

namespace {

constexpr std::size_t kMaxRule = std::size_t{1} << 22;

std::size_t power(unsigned k, std::size_t e) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < e; ++i) {
    n *= k;
    if (n > kMaxRule * 64) throw Error(ErrorCode::TooLarge, "block code table too large");
  }
  return n;
}

}  // namespace

BlockCode::BlockCode(unsigned alphabet, std::size_t window, std::vector<Symbol> rule)
    : k_(alphabet), w_(window), rule_(std::move(rule)) {
  if (alphabet < 2 || alphabet > 10) throw Error(ErrorCode::InvalidMap, "alphabet must be in [2,10]");
  if (window < 1) throw Error(ErrorCode::InvalidMap, "window must be >= 1");
  auto expected = power(k_, w_);
  if (expected > kMaxRule) throw Error(ErrorCode::TooLarge, "block code table above 2^22 entries");
  if (rule_.size() != expected) {
    throw Error(ErrorCode::InvalidMap, "rule has " + std::to_string(rule_.size()) + " entries, expected " +
                                           std::to_string(expected));
  }
  for (auto s : rule_)
    if (s >= k_) throw Error(ErrorCode::InvalidMap, "rule output symbol outside alphabet");
}

BlockCode BlockCode::identity(unsigned alphabet) {
  std::vector<Symbol> r(alphabet);
  for (unsigned i = 0; i < alphabet; ++i) r[i] = static_cast<Symbol>(i);
  return BlockCode(alphabet, 1, std::move(r));
}

BlockCode BlockCode::shift(unsigned alphabet) {
  std::vector<Symbol> r(std::size_t{alphabet} * alphabet);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<Symbol>(i % alphabet);
  return BlockCode(alphabet, 2, std::move(r));
}

Block BlockCode::apply(const Block& x) const {
  if (x.size() < w_) return {};
  Block y(x.size() - w_ + 1);
  const std::size_t mod = rule_.size();
  std::size_t idx = 0;
  for (std::size_t i = 0; i + 1 < w_; ++i) idx = idx * k_ + x[i];
  for (std::size_t i = 0; i < y.size(); ++i) {
    idx = (idx * k_ + x[i + w_ - 1]) % mod;
    y[i] = rule_[idx];
  }
  return y;
}

CylinderSet BlockCode::preimage(const CylinderSet& set) const {
  if (set.is_full()) return set;
  std::vector<Block> out;
  for (const auto& b : set.blocks()) {
    // DFS over x of length |b| + w - 1 with apply(x) == b.
    const std::size_t len = b.size() + w_ - 1;
    Block x;
    x.reserve(len);
    auto rec = [&](auto&& self) -> void {
      if (x.size() == len) {
        out.push_back(x);
        return;
      }
      for (unsigned s = 0; s < k_; ++s) {
        x.push_back(static_cast<Symbol>(s));
        bool ok = true;
        if (x.size() >= w_) {
          std::size_t idx = 0;
          for (std::size_t j = x.size() - w_; j < x.size(); ++j) idx = idx * k_ + x[j];
          ok = rule_[idx] == b[x.size() - w_];
        }
        if (ok) self(self);
        x.pop_back();
      }
    };
    rec(rec);
  }
  return CylinderSet(k_, std::move(out));
}

CylinderSet BlockCode::image(const CylinderSet& set, std::size_t depth) const {
  const std::size_t L = std::max(set.depth(), depth + w_ - 1);
  (void)leaf_count(k_, L);  // TooLarge guard, same bound as a leaf expansion
  boost::dynamic_bitset<> out(leaf_count(k_, depth));
  const std::size_t wmod = rule_.size();
  // Window i of a length-L word with base-k index x is (x / k^(L-w-i)) mod k^w.
  std::vector<std::size_t> shift(depth);
  for (std::size_t i = 0; i < depth; ++i) shift[i] = power(k_, L - w_ - i);
  for (const auto& b : set.blocks()) {
    const std::size_t ext = power(k_, L - b.size());
    const std::size_t base = block_index(b, k_) * ext;
    for (std::size_t e = 0; e < ext; ++e) {
      const std::size_t x = base + e;
      std::size_t y = 0;
      for (std::size_t i = 0; i < depth; ++i) y = y * k_ + rule_[(x / shift[i]) % wmod];
      out.set(y);
    }
  }
  return CylinderSet::from_leaves(k_, depth, out);
}

BlockCode BlockCode::minimized() const {
  for (std::size_t w = 1; w < w_; ++w) {
    const std::size_t span = power(k_, w_ - w);
    bool ok = true;
    for (std::size_t i = 0; i < rule_.size() && ok; ++i) ok = rule_[i] == rule_[(i / span) * span];
    if (ok) {
      std::vector<Symbol> r(rule_.size() / span);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = rule_[i * span];
      return BlockCode(k_, w, std::move(r));
    }
  }
  return *this;
}

std::string BlockCode::to_string() const {
  std::string s = "code " + std::to_string(w_) + " ";
  for (auto r : rule_) s += static_cast<char>('0' + r);
  return s;
}

BlockCode compose(const BlockCode& outer, const BlockCode& inner, std::size_t max_window) {
  if (outer.alphabet() != inner.alphabet()) throw Error(ErrorCode::BackendMismatch, "alphabet mismatch");
  const unsigned k = outer.alphabet();
  const std::size_t W = outer.window() + inner.window() - 1;
  if (W > max_window) {
    throw Error(ErrorCode::HorizonExceeded,
                "composed window " + std::to_string(W) + " exceeds maximum " + std::to_string(max_window));
  }
  const std::size_t size = power(k, W);
  if (size > kMaxRule) throw Error(ErrorCode::HorizonExceeded, "composed rule table too large");
  const std::size_t wi = inner.window(), wo = outer.window();
  const std::size_t inner_mod = inner.rule().size();
  std::vector<Symbol> rule(size);
  std::vector<std::size_t> tail(wo);
  for (std::size_t idx = 0; idx < size; ++idx) {
    // inner window j covers positions j .. j+wi-1 of the W-symbol input.
    std::size_t o = 0;
    for (std::size_t j = 0; j < wo; ++j) {
      std::size_t shift = power(k, W - wi - j);
      o = o * k + inner.rule()[(idx / shift) % inner_mod];
    }
    rule[idx] = outer.rule()[o];
  }
  return BlockCode(k, W, std::move(rule));
}

bool covers_everything(const BlockCode& f, const Block& prefix) {
  const unsigned k = f.alphabet();
  const std::size_t w = f.window();
  const std::size_t m = prefix.size();
  const std::size_t nwin = power(k, w - 1);
  // x position p (0-based) is constrained when p < m.
  auto allowed = [&](std::size_t pos, unsigned s) { return pos >= m || prefix[pos] == s; };
  boost::dynamic_bitset<> start(nwin);
  for (std::size_t win = 0; win < nwin; ++win) {
    auto b = block_from_index(win, w - 1, k);
    bool ok = true;
    for (std::size_t p = 0; p < b.size() && ok; ++p) ok = allowed(p, b[p]);
    if (ok) start.set(win);
  }
  if (start.none()) return false;
  const std::size_t T = m + 1 > w ? m + 1 - w : 0;  // steps after which no constraint remains
  using State = std::pair<std::size_t, boost::dynamic_bitset<>>;
  std::set<std::pair<std::size_t, std::vector<boost::dynamic_bitset<>::block_type>>> seen;
  auto key = [](const State& s) {
    std::vector<boost::dynamic_bitset<>::block_type> blocks;
    boost::to_block_range(s.second, std::back_inserter(blocks));
    return std::make_pair(s.first, blocks);
  };
  std::deque<State> queue{{0, start}};
  seen.insert(key(queue.front()));
  while (!queue.empty()) {
    auto [t, S] = queue.front();
    queue.pop_front();
    const std::size_t pos = t + w - 1;  // position of the next x symbol
    std::vector<boost::dynamic_bitset<>> next(k, boost::dynamic_bitset<>(nwin));
    for (auto win = S.find_first(); win != boost::dynamic_bitset<>::npos; win = S.find_next(win)) {
      for (unsigned s = 0; s < k; ++s) {
        if (!allowed(pos, s)) continue;
        std::size_t full = win * k + s;
        next[f.rule()[full]].set(full % nwin);
      }
    }
    const std::size_t t2 = std::min(t + 1, T);
    for (unsigned c = 0; c < k; ++c) {
      if (next[c].none()) return false;
      State st{t2, next[c]};
      if (seen.insert(key(st)).second) queue.push_back(std::move(st));
    }
  }
  return true;
}

namespace {

// Nodes of a finite graph admitting an infinite forward path.
std::vector<bool> infinite_future(const std::vector<std::vector<std::size_t>>& succ) {
  const std::size_t n = succ.size();
  std::vector<std::vector<std::size_t>> pred(n);
  std::vector<std::size_t> outdeg(n);
  for (std::size_t v = 0; v < n; ++v) {
    outdeg[v] = succ[v].size();
    for (auto u : succ[v]) pred[u].push_back(v);
  }
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> dead;
  for (std::size_t v = 0; v < n; ++v)
    if (outdeg[v] == 0) dead.push_back(v);
  while (!dead.empty()) {
    auto v = dead.back();
    dead.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (auto u : pred[v])
      if (alive[u] && --outdeg[u] == 0) dead.push_back(u);
  }
  return alive;
}

}  // namespace

bool images_meet(const BlockCode& f, const Block& a, const Block& b) {
  const unsigned k = f.alphabet();
  const std::size_t w = f.window();
  const std::size_t nwin = power(k, w - 1);
  const std::size_t m = std::max(a.size(), b.size());
  const std::size_t T = m + 1 > w ? m + 1 - w : 0;
  if ((T + 1) * nwin * nwin > kMaxRule) throw Error(ErrorCode::TooLarge, "pair graph too large");
  auto ok_a = [&](std::size_t pos, unsigned s) { return pos >= a.size() || a[pos] == s; };
  auto ok_b = [&](std::size_t pos, unsigned s) { return pos >= b.size() || b[pos] == s; };
  // node = (t, wa, wb)
  auto id = [&](std::size_t t, std::size_t wa, std::size_t wb) { return (t * nwin + wa) * nwin + wb; };
  const std::size_t N = (T + 1) * nwin * nwin;
  std::vector<std::vector<std::size_t>> succ(N);
  std::vector<bool> reach(N, false);
  std::deque<std::size_t> queue;
  for (std::size_t wa = 0; wa < nwin; ++wa) {
    auto ba = block_from_index(wa, w - 1, k);
    bool ok = true;
    for (std::size_t p = 0; p < ba.size() && ok; ++p) ok = ok_a(p, ba[p]);
    if (!ok) continue;
    for (std::size_t wb = 0; wb < nwin; ++wb) {
      auto bb = block_from_index(wb, w - 1, k);
      bool okb = true;
      for (std::size_t p = 0; p < bb.size() && okb; ++p) okb = ok_b(p, bb[p]);
      if (!okb) continue;
      reach[id(0, wa, wb)] = true;
      queue.push_back(id(0, wa, wb));
    }
  }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    const std::size_t wb = v % nwin, wa = (v / nwin) % nwin, t = v / nwin / nwin;
    const std::size_t pos = t + w - 1;
    const std::size_t t2 = std::min(t + 1, T);
    for (unsigned sa = 0; sa < k; ++sa) {
      if (!ok_a(pos, sa)) continue;
      for (unsigned sb = 0; sb < k; ++sb) {
        if (!ok_b(pos, sb)) continue;
        std::size_t fa = wa * k + sa, fb = wb * k + sb;
        if (f.rule()[fa] != f.rule()[fb]) continue;
        auto u = id(t2, fa % nwin, fb % nwin);
        succ[v].push_back(u);
        if (!reach[u]) {
          reach[u] = true;
          queue.push_back(u);
        }
      }
    }
  }
  auto alive = infinite_future(succ);
  for (std::size_t v = 0; v < N; ++v)
    if (reach[v] && v / nwin / nwin == 0 && alive[v]) return true;
  return false;
}

Verdict is_surjective(const BlockCode& f) { return Verdict::from(covers_everything(f, {})); }

Verdict is_injective(const BlockCode& f) {
  const unsigned k = f.alphabet();
  const std::size_t w = f.window();
  const std::size_t nwin = power(k, w - 1);
  if (2 * nwin * nwin > kMaxRule) return Verdict::unknown(w);
  // node = (differed, wa, wb); every window pair is a possible start.
  auto id = [&](std::size_t d, std::size_t wa, std::size_t wb) { return (d * nwin + wa) * nwin + wb; };
  const std::size_t N = 2 * nwin * nwin;
  std::vector<std::vector<std::size_t>> succ(N);
  for (std::size_t d = 0; d < 2; ++d)
    for (std::size_t wa = 0; wa < nwin; ++wa)
      for (std::size_t wb = 0; wb < nwin; ++wb)
        for (unsigned sa = 0; sa < k; ++sa)
          for (unsigned sb = 0; sb < k; ++sb) {
            std::size_t fa = wa * k + sa, fb = wb * k + sb;
            if (f.rule()[fa] != f.rule()[fb]) continue;
            std::size_t d2 = (d || sa != sb) ? 1 : 0;
            succ[id(d, wa, wb)].push_back(id(d2, fa % nwin, fb % nwin));
          }
  auto alive = infinite_future(succ);
  // Reachable flagged nodes: start states carry the flag when windows differ.
  std::vector<bool> reach(N, false);
  std::deque<std::size_t> queue;
  for (std::size_t wa = 0; wa < nwin; ++wa)
    for (std::size_t wb = 0; wb < nwin; ++wb) {
      auto v = id(wa != wb ? 1 : 0, wa, wb);
      if (!reach[v]) {
        reach[v] = true;
        queue.push_back(v);
      }
    }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto u : succ[v])
      if (!reach[u]) {
        reach[u] = true;
        queue.push_back(u);
      }
  }
  for (std::size_t v = nwin * nwin; v < N; ++v)
    if (reach[v] && alive[v]) return Verdict::no();
  return Verdict::yes();
}

Verdict is_open(const BlockCode& f) {
  auto m = f.minimized();
  if (m.window() == 1) {
    std::vector<bool> hit(m.alphabet());
    for (auto s : m.rule()) hit[s] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return Verdict::yes();
  }
  return Verdict::unknown(f.window());
}

// ---------------------------------------------------------------------------
// ShiftNdds

ShiftNdds::ShiftNdds(ShiftSpace space, std::vector<BlockCode> family, SequenceSpec seq, std::size_t max_window)
    : space_(space), family_(std::move(family)), seq_(std::move(seq)), max_window_(max_window) {
  if (family_.empty()) throw Error(ErrorCode::InvalidMap, "family must be nonempty");
  for (std::size_t i = 0; i < family_.size(); ++i) {
    if (family_[i].alphabet() != space_.alphabet()) {
      throw Error(ErrorCode::InvalidMap, "code " + std::to_string(i) + " uses a different alphabet");
    }
  }
  seq_.validate(family_.size());
}

const BlockCode& ShiftNdds::map_at(std::size_t n) const { return family_[seq_.index_at(n)]; }

const BlockCode& ShiftNdds::iterate(std::size_t n) const {
  if (n < 1) throw Error(ErrorCode::InvalidIndex, "iterate index must be >= 1");
  if (iterates_.empty()) iterates_.push_back(map_at(1));
  while (iterates_.size() < n) {
    auto next = compose(map_at(iterates_.size() + 1), iterates_.back(), max_window_).minimized();
    iterates_.push_back(std::move(next));
  }
  return iterates_[n - 1];
}

BlockCode ShiftNdds::word_map(const Word& alpha, WordMode mode) const {
  alpha.validate();
  BlockCode out = BlockCode::identity(alphabet());
  for (auto letter : alpha.letters) {
    const BlockCode* f = nullptr;
    if (mode == WordMode::Position) {
      f = &map_at(letter);
    } else {
      if (letter > family_.size()) throw Error(ErrorCode::InvalidIndex, "family index out of range");
      f = &family_[letter - 1];
    }
    out = compose(*f, out, max_window_).minimized();
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> ShiftNdds::exact_trace(std::size_t limit) const {
  const std::size_t L = seq_.prefix.size();
  const std::size_t P = seq_.period.size();
  std::map<std::tuple<std::size_t, std::size_t, std::vector<Symbol>>, std::size_t> seen;
  try {
    for (std::size_t n = 1; n <= limit; ++n) {
      const auto& g = iterate(n);
      if (n < std::max<std::size_t>(1, L)) continue;
      auto [it, fresh] = seen.try_emplace({(n - L) % P, g.window(), g.rule()}, n);
      if (!fresh) return std::make_pair(it->second - 1, n - it->second);
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HorizonExceeded) throw;
  }
  return std::nullopt;
}

}  // namespace transit
