#pragma once

#include "transit/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace transit {

using Point = std::uint32_t;

// A subset of a finite space {0, ..., universe-1}.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : bits_(universe) {}
  PointSet(std::size_t universe, std::initializer_list<Point> points);
  PointSet(std::size_t universe, std::span<const Point> points);

  static PointSet full(std::size_t universe);
  static PointSet singleton(std::size_t universe, Point p);
  // Bit i of mask selects point i; universe must be <= 64.
  static PointSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_full() const noexcept { return bits_.all(); }

  bool contains(Point p) const { return p < bits_.size() && bits_.test(p); }
  void insert(Point p) { bits_.set(p); }
  void erase(Point p) { bits_.reset(p); }

  bool intersects(const PointSet& other) const { return bits_.intersects(other.bits_); }
  bool subset_of(const PointSet& other) const { return bits_.is_subset_of(other.bits_); }

  PointSet complement() const;

  PointSet& operator|=(const PointSet& o) { bits_ |= o.bits_; return *this; }
  PointSet& operator&=(const PointSet& o) { bits_ &= o.bits_; return *this; }
  PointSet& operator-=(const PointSet& o) { bits_ -= o.bits_; return *this; }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }
  // Lexicographic on the sorted member lists; used for deterministic witnesses.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b);

  std::vector<Point> points() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != boost::dynamic_bitset<>::npos; i = bits_.find_next(i)) {
      f(static_cast<Point>(i));
    }
  }

  // "{0,2}"
  std::string to_string() const;

 private:
  boost::dynamic_bitset<> bits_;
};

class Epsilon {
 public:
  // Throws Error(InvalidEpsilon) unless value > 0.
  explicit Epsilon(Rational value);
  const Rational& value() const noexcept { return value_; }

 private:
  Rational value_;
};

// A finite metric space. The topology is discrete; the metric only matters
// for epsilon-density.
class FiniteSpace {
 public:
  // Validates zero diagonal, positivity off the diagonal, symmetry and the
  // triangle inequality; throws Error(MetricViolation) naming the offending
  // entry or triple.
  explicit FiniteSpace(std::vector<std::vector<Rational>> dist);

  static FiniteSpace discrete(std::size_t n);
  // d(i,j) = min(|i-j|, n-|i-j|)
  static FiniteSpace cyclic(std::size_t n);
  // X × Y with d((a,b),(a',b')) = max(d(a,a'), d(b,b')); point (a,b) is
  // a*|Y| + b. A max of metrics is a metric, so no re-validation.
  static FiniteSpace max_product(const FiniteSpace& x, const FiniteSpace& y);

  std::size_t size() const noexcept { return dist_.size(); }
  const Rational& distance(Point a, Point b) const { return dist_[a][b]; }
  const std::vector<std::vector<Rational>>& distances() const noexcept { return dist_; }
  Rational diameter() const;

  PointSet empty_set() const { return PointSet(size()); }
  PointSet whole() const { return PointSet::full(size()); }
  void check_point(Point p) const;

  // Representative radii for "for every eps > 0": epsilon-density is a step
  // function of eps, constant on (d_i, d_{i+1}] between consecutive realized
  // distances, so the realized distances, their midpoints and one radius
  // above the diameter cover every case.
  std::vector<Rational> epsilon_grid() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  struct Trusted {};
  FiniteSpace(std::vector<std::vector<Rational>> dist, Trusted) : dist_(std::move(dist)) {}
  std::vector<std::vector<Rational>> dist_;
};

PointSet ball(const FiniteSpace& space, Point center, const Epsilon& eps);
bool is_eps_dense(const FiniteSpace& space, const PointSet& set, const Epsilon& eps);
bool is_dense(const FiniteSpace& space, const PointSet& set);
std::pair<PointSet, PointSet> closure_interior(const FiniteSpace& space, const PointSet& set);

// ---------------------------------------------------------------------------
// One-sided full shift over {0, ..., k-1}, d(x,y) = 2^-i where i is the
// 1-based index of the first disagreement.

using Symbol = std::uint8_t;
using Block = std::vector<Symbol>;

Block parse_block(std::string_view text);
std::string to_string(const Block& block);

class ShiftSpace {
 public:
  // Throws Error(PreconditionViolated) unless 2 <= alphabet <= 10.
  explicit ShiftSpace(unsigned alphabet);
  unsigned alphabet() const noexcept { return k_; }
  // Distance between two points agreeing exactly on their first `agree` symbols.
  static Rational distance_for_agreement(std::size_t agree);

  friend bool operator==(const ShiftSpace&, const ShiftSpace&) = default;

 private:
  unsigned k_;
};

// Smallest cylinder depth d with {y : d(x,y) < eps} = [x_1 .. x_d].
std::size_t cylinder_depth(const Epsilon& eps);

// A finite union of cylinders in canonical form: an antichain of blocks (no
// block is a prefix of another) in which no complete sibling group remains
// (k sibling blocks are merged into their parent). The canonical form is
// unique, so equality is structural.
class CylinderSet {
 public:
  explicit CylinderSet(unsigned alphabet) : k_(alphabet) {}
  CylinderSet(unsigned alphabet, std::vector<Block> blocks);

  static CylinderSet empty(unsigned alphabet) { return CylinderSet(alphabet); }
  static CylinderSet full(unsigned alphabet) { return CylinderSet(alphabet, {Block{}}); }
  static CylinderSet cylinder(unsigned alphabet, Block block) {
    return CylinderSet(alphabet, {std::move(block)});
  }
  // Leaves are the k^depth blocks of length `depth` in base-k order.
  static CylinderSet from_leaves(unsigned alphabet, std::size_t depth,
                                 const boost::dynamic_bitset<>& leaves);

  unsigned alphabet() const noexcept { return k_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  std::size_t depth() const noexcept;
  bool empty() const noexcept { return blocks_.empty(); }
  bool is_full() const noexcept { return blocks_.size() == 1 && blocks_.front().empty(); }

  // Membership bitmap over the k^depth blocks of length depth; depth must be
  // at least depth(). Throws Error(TooLarge) beyond 2^26 leaves.
  boost::dynamic_bitset<> leaves(std::size_t depth) const;

  // Whether the cylinder [block] meets / lies inside this set.
  bool meets(const Block& block) const;
  bool contains_cylinder(const Block& block) const;

  CylinderSet complement() const;
  bool intersects(const CylinderSet& other) const;
  bool subset_of(const CylinderSet& other) const;

  friend CylinderSet operator|(const CylinderSet& a, const CylinderSet& b);
  friend CylinderSet operator&(const CylinderSet& a, const CylinderSet& b);
  friend bool operator==(const CylinderSet& a, const CylinderSet& b) = default;

  // "[0]|[10]", or "empty" / "X".
  std::string to_string() const;

 private:
  unsigned k_;
  std::vector<Block> blocks_;
};

std::size_t block_index(const Block& block, unsigned alphabet);
Block block_from_index(std::size_t index, std::size_t length, unsigned alphabet);
std::size_t leaf_count(unsigned alphabet, std::size_t depth);

// `center` stands for any point of the cylinder [center]; it must be at least
// as deep as the ball.
CylinderSet ball(const ShiftSpace& space, const Block& center, const Epsilon& eps);
bool is_eps_dense(const ShiftSpace& space, const CylinderSet& set, const Epsilon& eps);
bool is_dense(const ShiftSpace& space, const CylinderSet& set);
std::pair<CylinderSet, CylinderSet> closure_interior(const ShiftSpace& space,
                                                     const CylinderSet& set);

}  // namespace transit
