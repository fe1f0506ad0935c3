#include "transit/space.hpp"

#include "transit/error.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace transit {

// ---------------------------------------------------------------------------
// PointSet

PointSet::PointSet(std::size_t universe, std::initializer_list<Point> points) : bits_(universe) {
  for (auto p : points) bits_.set(p);
}

PointSet::PointSet(std::size_t universe, std::span<const Point> points) : bits_(universe) {
  for (auto p : points) bits_.set(p);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  s.bits_.set();
  return s;
}

PointSet PointSet::singleton(std::size_t universe, Point p) {
  PointSet s(universe);
  s.bits_.set(p);
  return s;
}

PointSet PointSet::from_mask(std::size_t universe, std::uint64_t mask) {
  PointSet s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i) {
    if (mask >> i & 1U) s.bits_.set(i);
  }
  return s;
}

PointSet PointSet::complement() const {
  PointSet s(*this);
  s.bits_.flip();
  return s;
}

std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
  auto pa = a.points();
  auto pb = b.points();
  return std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
}

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(count());
  for_each([&](Point p) { out.push_back(p); });
  return out;
}

std::string PointSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](Point p) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(p);
  });
  return s + "}";
}

// ---------------------------------------------------------------------------
// Finite metric spaces

Epsilon::Epsilon(Rational value) : value_(value) {
  if (value <= Rational(0)) throw Error(ErrorCode::InvalidEpsilon, "epsilon must be positive, got " + transit::to_string(value));
}

FiniteSpace::FiniteSpace(std::vector<std::vector<Rational>> dist) : dist_(std::move(dist)) {
  const auto n = dist_.size();
  if (n == 0) throw Error(ErrorCode::MetricViolation, "space must have at least one point");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i].size() != n) {
      throw Error(ErrorCode::MetricViolation, "distance row " + std::to_string(i) + " has " +
                                                  std::to_string(dist_[i].size()) + " entries, expected " +
                                                  std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist_[i][i] != Rational(0)) throw Error(ErrorCode::MetricViolation, "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dist_[i][j] <= Rational(0)) {
        throw Error(ErrorCode::MetricViolation,
                    "d(" + std::to_string(i) + "," + std::to_string(j) + ") must be positive");
      }
      if (dist_[i][j] != dist_[j][i]) {
        throw Error(ErrorCode::MetricViolation,
                    "asymmetric: d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" +
                        std::to_string(j) + "," + std::to_string(i) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (dist_[i][k] > dist_[i][j] + dist_[j][k]) {
          throw Error(ErrorCode::MetricViolation,
                      "triangle inequality fails for (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + "): d(" + std::to_string(i) + "," + std::to_string(k) + ")=" +
                          transit::to_string(dist_[i][k]) + " > " + transit::to_string(dist_[i][j]) + "+" +
                          transit::to_string(dist_[j][k]));
        }
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  return FiniteSpace(std::move(d));
}

FiniteSpace FiniteSpace::max_product(const FiniteSpace& x, const FiniteSpace& y) {
  const auto nx = x.size(), ny = y.size();
  std::vector<std::vector<Rational>> d(nx * ny, std::vector<Rational>(nx * ny));
  for (std::size_t a = 0; a < nx; ++a)
    for (std::size_t b = 0; b < ny; ++b)
      for (std::size_t a2 = 0; a2 < nx; ++a2)
        for (std::size_t b2 = 0; b2 < ny; ++b2)
          d[a * ny + b][a2 * ny + b2] = std::max(x.dist_[a][a2], y.dist_[b][b2]);
  return FiniteSpace(std::move(d), Trusted{});
}

FiniteSpace FiniteSpace::cyclic(std::size_t n) {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto diff = i > j ? i - j : j - i;
      d[i][j] = Rational(static_cast<std::int64_t>(std::min(diff, n - diff)));
    }
  return FiniteSpace(std::move(d));
}

Rational FiniteSpace::diameter() const {
  Rational best(0);
  for (const auto& row : dist_)
    for (const auto& v : row) best = std::max(best, v);
  return best;
}

void FiniteSpace::check_point(Point p) const {
  if (p >= size()) {
    throw Error(ErrorCode::InvalidPoint, "point " + std::to_string(p) + " outside space of size " + std::to_string(size()));
  }
}

std::vector<Rational> FiniteSpace::epsilon_grid() const {
  std::set<Rational> realized;
  for (const auto& row : dist_)
    for (const auto& v : row)
      if (v > 0) realized.insert(v);
  std::vector<Rational> grid;
  // Below the smallest positive distance every ball is a singleton.
  Rational prev(0);
  for (const auto& v : realized) {
    grid.push_back((prev + v) / 2);
    grid.push_back(v);
    prev = v;
  }
  grid.push_back(prev + 1);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

PointSet ball(const FiniteSpace& space, Point center, const Epsilon& eps) {
  space.check_point(center);
  PointSet out(space.size());
  for (Point y = 0; y < space.size(); ++y)
    if (space.distance(center, y) < eps.value()) out.insert(y);
  return out;
}

bool is_eps_dense(const FiniteSpace& space, const PointSet& set, const Epsilon& eps) {
  for (Point x = 0; x < space.size(); ++x) {
    bool hit = false;
    set.for_each([&](Point y) { hit = hit || space.distance(x, y) < eps.value(); });
    if (!hit) return false;
  }
  return true;
}

bool is_dense(const FiniteSpace&, const PointSet& set) { return set.is_full(); }

std::pair<PointSet, PointSet> closure_interior(const FiniteSpace&, const PointSet& set) { return {set, set}; }

// ---------------------------------------------------------------------------
// Shift space and cylinder sets

Block parse_block(std::string_view text) {
  Block out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw Error(ErrorCode::ParseError, "bad symbol '" + std::string(1, c) + "' in block");
    out.push_back(static_cast<Symbol>(c - '0'));
  }
  return out;
}

std::string to_string(const Block& block) {
  std::string s;
  for (auto b : block) s += static_cast<char>('0' + b);
  return s;
}

ShiftSpace::ShiftSpace(unsigned alphabet) : k_(alphabet) {
  if (alphabet < 2 || alphabet > 10) {
    throw Error(ErrorCode::PreconditionViolated, "alphabet size must be in [2,10], got " + std::to_string(alphabet));
  }
}

Rational ShiftSpace::distance_for_agreement(std::size_t agree) {
  if (agree >= 62) throw Error(ErrorCode::TooLarge, "agreement length too large for exact distance");
  return Rational(1, std::int64_t{1} << (agree + 1));
}

std::size_t cylinder_depth(const Epsilon& eps) {
  // y agrees with x on exactly m symbols => d = 2^-(m+1); need 2^-(m+1) < eps.
  for (std::size_t m = 0; m < 62; ++m) {
    if (eps.value() * Rational(std::int64_t{1} << (m + 1)) > Rational(1)) return m;
  }
  throw Error(ErrorCode::TooLarge, "epsilon too small: " + transit::to_string(eps.value()));
}

std::size_t leaf_count(unsigned alphabet, std::size_t depth) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < depth; ++i) {
    n *= alphabet;
    if (n > (std::size_t{1} << 26)) {
      throw Error(ErrorCode::TooLarge, "cylinder expansion beyond 2^26 leaves (depth " + std::to_string(depth) + ")");
    }
  }
  return n;
}

std::size_t block_index(const Block& block, unsigned alphabet) {
  std::size_t idx = 0;
  for (auto s : block) idx = idx * alphabet + s;
  return idx;
}

Block block_from_index(std::size_t index, std::size_t length, unsigned alphabet) {
  Block b(length);
  for (std::size_t i = length; i-- > 0;) {
    b[i] = static_cast<Symbol>(index % alphabet);
    index /= alphabet;
  }
  return b;
}

namespace {

struct Trie {
  bool full = false;
  std::vector<std::unique_ptr<Trie>> kids;
};

void trie_insert(Trie& root, const Block& b, unsigned k) {
  Trie* node = &root;
  for (auto s : b) {
    if (node->full) return;
    if (node->kids.empty()) node->kids.resize(k);
    if (!node->kids[s]) node->kids[s] = std::make_unique<Trie>();
    node = node->kids[s].get();
  }
  node->full = true;
  node->kids.clear();
}

// Returns true when the subtree is empty after collapsing.
bool trie_collapse(Trie& node, unsigned k) {
  if (node.full) return false;
  if (node.kids.empty()) return true;
  bool all_full = true;
  bool all_empty = true;
  for (auto& kid : node.kids) {
    if (kid && trie_collapse(*kid, k)) kid.reset();
    if (!kid || !kid->full) all_full = false;
    if (kid) all_empty = false;
  }
  if (all_full) {
    node.full = true;
    node.kids.clear();
  } else if (all_empty) {
    node.kids.clear();
  }
  return all_empty;
}

void trie_emit(const Trie& node, Block& prefix, std::vector<Block>& out) {
  if (node.full) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t s = 0; s < node.kids.size(); ++s) {
    if (!node.kids[s]) continue;
    prefix.push_back(static_cast<Symbol>(s));
    trie_emit(*node.kids[s], prefix, out);
    prefix.pop_back();
  }
}

bool is_prefix(const Block& a, const Block& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

bool related(const Block& a, const Block& b) { return is_prefix(a, b) || is_prefix(b, a); }

void complement_into(const Trie* node, unsigned k, Block& prefix, std::vector<Block>& out) {
  if (node == nullptr) {
    out.push_back(prefix);
    return;
  }
  if (node->full) return;
  for (unsigned s = 0; s < k; ++s) {
    prefix.push_back(static_cast<Symbol>(s));
    complement_into(node->kids.empty() ? nullptr : node->kids[s].get(), k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

CylinderSet::CylinderSet(unsigned alphabet, std::vector<Block> blocks) : k_(alphabet) {
  Trie root;
  for (const auto& b : blocks) {
    for (auto s : b) {
      if (s >= alphabet) throw Error(ErrorCode::InvalidPoint, "symbol out of alphabet in block " + transit::to_string(b));
    }
    trie_insert(root, b, alphabet);
  }
  trie_collapse(root, alphabet);
  Block prefix;
  trie_emit(root, prefix, blocks_);
}

CylinderSet CylinderSet::from_leaves(unsigned alphabet, std::size_t depth, const boost::dynamic_bitset<>& leaves) {
  // Bottom-up merge: state 0 empty, 1 full, 2 mixed.
  std::vector<std::uint8_t> level(leaves.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) level[i] = leaves.test(i) ? 1 : 0;
  std::vector<std::vector<std::uint8_t>> levels{level};
  for (std::size_t d = depth; d > 0; --d) {
    const auto& kids = levels.back();
    std::vector<std::uint8_t> up(kids.size() / alphabet);
    for (std::size_t i = 0; i < up.size(); ++i) {
      bool all0 = true, all1 = true;
      for (unsigned s = 0; s < alphabet; ++s) {
        auto v = kids[i * alphabet + s];
        all0 = all0 && v == 0;
        all1 = all1 && v == 1;
      }
      up[i] = all1 ? 1 : all0 ? 0 : 2;
    }
    levels.push_back(std::move(up));
  }
  std::reverse(levels.begin(), levels.end());  // levels[d] has k^d nodes
  CylinderSet out(alphabet);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  // DFS in lexicographic order.
  while (!stack.empty()) {
    auto [d, idx] = stack.back();
    stack.pop_back();
    auto st = levels[d][idx];
    if (st == 1) {
      out.blocks_.push_back(block_from_index(idx, d, alphabet));
    } else if (st == 2) {
      for (unsigned s = alphabet; s-- > 0;) stack.push_back({d + 1, idx * alphabet + s});
    }
  }
  return out;
}

std::size_t CylinderSet::depth() const noexcept {
  std::size_t d = 0;
  for (const auto& b : blocks_) d = std::max(d, b.size());
  return d;
}

boost::dynamic_bitset<> CylinderSet::leaves(std::size_t depth) const {
  boost::dynamic_bitset<> out(leaf_count(k_, depth));
  for (const auto& b : blocks_) {
    if (b.size() > depth) throw Error(ErrorCode::PreconditionViolated, "leaf depth below set depth");
    std::size_t span = leaf_count(k_, depth - b.size());
    std::size_t lo = block_index(b, k_) * span;
    for (std::size_t i = 0; i < span; ++i) out.set(lo + i);
  }
  return out;
}

bool CylinderSet::meets(const Block& block) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return related(b, block); });
}

bool CylinderSet::contains_cylinder(const Block& block) const {
  if (std::any_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return is_prefix(b, block); })) return true;
  // [block] may be covered by finer blocks only if they form complete groups,
  // which canonical form forbids; so prefix containment is the whole story.
  return false;
}

CylinderSet CylinderSet::complement() const {
  Trie root;
  for (const auto& b : blocks_) trie_insert(root, b, k_);
  std::vector<Block> out;
  Block prefix;
  complement_into(&root, k_, prefix, out);
  return CylinderSet(k_, std::move(out));
}

bool CylinderSet::intersects(const CylinderSet& other) const {
  for (const auto& a : blocks_)
    for (const auto& b : other.blocks_)
      if (related(a, b)) return true;
  return false;
}

bool CylinderSet::subset_of(const CylinderSet& other) const { return !intersects(other.complement()); }

CylinderSet operator|(const CylinderSet& a, const CylinderSet& b) {
  auto blocks = a.blocks_;
  blocks.insert(blocks.end(), b.blocks_.begin(), b.blocks_.end());
  return CylinderSet(a.k_, std::move(blocks));
}

CylinderSet operator&(const CylinderSet& a, const CylinderSet& b) {
  std::vector<Block> blocks;
  for (const auto& x : a.blocks_)
    for (const auto& y : b.blocks_) {
      if (is_prefix(x, y)) blocks.push_back(y);
      else if (is_prefix(y, x)) blocks.push_back(x);
    }
  return CylinderSet(a.k_, std::move(blocks));
}

std::string CylinderSet::to_string() const {
  if (empty()) return "empty";
  if (is_full()) return "X";
  std::string s;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) s += '|';
    s += '[' + transit::to_string(blocks_[i]) + ']';
  }
  return s;
}

CylinderSet ball(const ShiftSpace& space, const Block& center, const Epsilon& eps) {
  auto d = cylinder_depth(eps);
  if (center.size() < d) {
    throw Error(ErrorCode::InvalidPoint, "center word '" + to_string(center) + "' shorter than ball depth " + std::to_string(d));
  }
  return CylinderSet::cylinder(space.alphabet(), Block(center.begin(), center.begin() + static_cast<std::ptrdiff_t>(d)));
}

bool is_eps_dense(const ShiftSpace&, const CylinderSet& set, const Epsilon& eps) {
  // Every depth-m cylinder meets the set iff the complement contains no
  // cylinder of depth <= m.
  auto m = cylinder_depth(eps);
  auto comp = set.complement();
  return std::all_of(comp.blocks().begin(), comp.blocks().end(), [&](const Block& b) { return b.size() > m; });
}

bool is_dense(const ShiftSpace&, const CylinderSet& set) { return set.is_full(); }

std::pair<CylinderSet, CylinderSet> closure_interior(const ShiftSpace&, const CylinderSet& set) { return {set, set}; }

}  // namespace transit
