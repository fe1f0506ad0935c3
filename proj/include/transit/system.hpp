#pragma once

#include "transit/space.hpp"
#include "transit/verdict.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <deque>
#include <vector>

namespace transit {

// ---------------------------------------------------------------------------
// Finite maps

// A total self-map of {0, ..., n-1} given by its lookup table.
class FiniteMap {
 public:
  FiniteMap() = default;
  // Throws Error(InvalidMap) if an entry is out of range.
  explicit FiniteMap(std::vector<Point> table);

  static FiniteMap identity(std::size_t n);
  static FiniteMap constant(std::size_t n, Point value);
  // x -> x + k mod n
  static FiniteMap rotation(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return table_.size(); }
  Point operator()(Point x) const { return table_[x]; }
  const std::vector<Point>& table() const noexcept { return table_; }

  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& b) const;

  bool is_surjective() const;
  bool is_injective() const { return is_surjective(); }

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;
  friend auto operator<=>(const FiniteMap&, const FiniteMap&) = default;

  // "[1,2,3,0]"
  std::string to_string() const;

 private:
  std::vector<Point> table_;
};

// outer ∘ inner
FiniteMap compose(const FiniteMap& outer, const FiniteMap& inner);

struct FiniteMapHash {
  std::size_t operator()(const FiniteMap& f) const noexcept;
};

// ---------------------------------------------------------------------------
// Sequences and words

// f_n for n >= 1: prefix first, then the period repeated forever. Entries are
// 0-based family indices.
struct SequenceSpec {
  std::vector<std::size_t> prefix;
  std::vector<std::size_t> period;

  // Family index of f_n. Throws Error(InvalidIndex) for n < 1.
  std::size_t index_at(std::size_t n) const;
  // Throws Error(InvalidSequence) on an empty period or an index >= family_size.
  void validate(std::size_t family_size) const;
  // Sorted distinct family indices that actually occur.
  std::vector<std::size_t> used_indices() const;
  // Family indices occurring in the period (those used infinitely often).
  std::vector<std::size_t> recurring_indices() const;

  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;
};

// How word letters are resolved: against sequence positions n (f_n) or
// against the family list (1-based).
enum class WordMode { Position, Family };

struct Word {
  std::vector<std::size_t> letters;  // all >= 1, nonempty

  // Throws Error(InvalidWord) on an empty word or a zero letter.
  void validate() const;
  Word then(const Word& other) const;
  std::string to_string() const;  // "(1,2,2)"

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (a.letters.size() != b.letters.size()) return a.letters.size() <=> b.letters.size();
    return a.letters <=> b.letters;
  }
};

// ---------------------------------------------------------------------------
// Composition trace: g_n = f_1^n is eventually periodic in the finite monoid.

class CompositionTrace {
 public:
  CompositionTrace(std::vector<FiniteMap> maps, std::size_t preperiod, std::size_t cycle);

  std::size_t preperiod() const noexcept { return s_; }
  std::size_t cycle() const noexcept { return p_; }
  std::size_t length() const noexcept { return s_ + p_; }
  // g_1 .. g_{s+p}
  const std::vector<FiniteMap>& maps() const noexcept { return maps_; }

  // Index into maps() of f_1^n, n >= 1.
  std::size_t slot(std::size_t n) const;
  const FiniteMap& iterate(std::size_t n) const { return maps_[slot(n)]; }

  // Indices n in [s+1, s+p]: the values f_1^n takes infinitely often.
  std::vector<std::size_t> cycle_indices() const;

 private:
  std::vector<FiniteMap> maps_;
  std::size_t s_;
  std::size_t p_;
};

// A non-autonomous system on a finite metric space.
class Ndds {
 public:
  // Validates map sizes and the sequence; throws InvalidMap/InvalidSequence.
  Ndds(FiniteSpace space, std::vector<FiniteMap> family, SequenceSpec seq);

  // Convenience: autonomous system (X, f).
  static Ndds autonomous(FiniteSpace space, FiniteMap f);

  const FiniteSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_.size(); }
  const std::vector<FiniteMap>& family() const noexcept { return family_; }
  const SequenceSpec& sequence() const noexcept { return seq_; }

  const FiniteMap& map_at(std::size_t n) const;
  const FiniteMap& iterate(std::size_t n) const { return trace_->iterate(n); }
  const CompositionTrace& trace() const noexcept { return *trace_; }

  // The set {f_n : n in N} as family indices (sorted, distinct).
  const std::vector<std::size_t>& used() const noexcept { return used_; }
  std::vector<FiniteMap> used_maps() const;
  // First sequence position at which family index i occurs.
  std::size_t first_position(std::size_t family_index) const;
  // One sequence position per used map: the alphabet for position-mode words.
  std::vector<std::size_t> representative_positions() const;

  bool all_surjective() const;
  bool all_injective() const { return all_surjective(); }

  // f_alpha = f_{n_p} ∘ ... ∘ f_{n_1}
  FiniteMap word_map(const Word& alpha, WordMode mode = WordMode::Position) const;

  // The system with f_n replaced by f_{n+m}.
  Ndds shifted(std::size_t m) const;

  PointSet empty_set() const { return space_.empty_set(); }
  PointSet whole() const { return space_.whole(); }

 private:
  FiniteSpace space_;
  std::vector<FiniteMap> family_;
  SequenceSpec seq_;
  std::vector<std::size_t> used_;
  std::shared_ptr<const CompositionTrace> trace_;
};

// Builds the trace by detecting the first repeat of (f_1^n, phase of the
// sequence), then minimizes the cycle and the preperiod. Throws
// Error(TooLarge) if the trace exceeds max_length.
CompositionTrace composition_trace(const std::vector<FiniteMap>& family, const SequenceSpec& seq,
                                   std::size_t max_length = 1'000'000);

// Finite-backend map predicates; every map is open in the discrete topology.
Verdict is_surjective(const FiniteMap& f);
Verdict is_injective(const FiniteMap& f);
Verdict is_open(const FiniteMap& f);

// ---------------------------------------------------------------------------
// Sliding block codes on the one-sided full shift

// y_i = rule(x_i .. x_{i+w-1}); the rule is indexed by the base-k value of
// the window.
class BlockCode {
 public:
  // Throws Error(InvalidMap) if the rule has the wrong size or bad symbols,
  // Error(TooLarge) above 2^22 entries.
  BlockCode(unsigned alphabet, std::size_t window, std::vector<Symbol> rule);

  static BlockCode identity(unsigned alphabet);
  // y_i = x_{i+1}
  static BlockCode shift(unsigned alphabet);

  unsigned alphabet() const noexcept { return k_; }
  std::size_t window() const noexcept { return w_; }
  const std::vector<Symbol>& rule() const noexcept { return rule_; }

  // Output has length |x| - w + 1 (empty if x is shorter than the window).
  Block apply(const Block& x) const;

  // Exact: a depth-(d+w-1) cylinder set.
  CylinderSet preimage(const CylinderSet& set) const;
  // The depth-`depth` cylinders meeting f(set): an outer approximation of the
  // image that is exact as far as "f(set) meets [v]" for |v| = depth.
  CylinderSet image(const CylinderSet& set, std::size_t depth) const;

  // Same function with trailing ignored window positions dropped.
  BlockCode minimized() const;

  friend bool operator==(const BlockCode&, const BlockCode&) = default;
  std::string to_string() const;

 private:
  unsigned k_;
  std::size_t w_;
  std::vector<Symbol> rule_;
};

// outer ∘ inner; window = w_outer + w_inner - 1. Throws
// Error(HorizonExceeded) if the result would exceed max_window.
BlockCode compose(const BlockCode& outer, const BlockCode& inner, std::size_t max_window);

// Exact: whether f([prefix]) is the whole shift (prefix may be empty).
bool covers_everything(const BlockCode& f, const Block& prefix);
// Exact: whether f([a]) and f([b]) intersect.
bool images_meet(const BlockCode& f, const Block& a, const Block& b);

Verdict is_surjective(const BlockCode& f);
Verdict is_injective(const BlockCode& f);
// True for a bijective one-symbol rule; otherwise Unknown.
Verdict is_open(const BlockCode& f);

struct SymbolicConfig {
  std::size_t depth = 4;
  std::size_t horizon = 16;
  // Widest composed code materialized. The default leaves room for 16-fold
  // iterates of width-2 codes.
  std::size_t max_window = 20;
};

// A non-autonomous system on the full shift.
class ShiftNdds {
 public:
  ShiftNdds(ShiftSpace space, std::vector<BlockCode> family, SequenceSpec seq,
            std::size_t max_window = SymbolicConfig{}.max_window);

  const ShiftSpace& space() const noexcept { return space_; }
  unsigned alphabet() const noexcept { return space_.alphabet(); }
  const std::vector<BlockCode>& family() const noexcept { return family_; }
  const SequenceSpec& sequence() const noexcept { return seq_; }
  std::size_t max_window() const noexcept { return max_window_; }

  const BlockCode& map_at(std::size_t n) const;
  // f_1^n; throws Error(HorizonExceeded) past max_window. Memoized.
  const BlockCode& iterate(std::size_t n) const;
  BlockCode word_map(const Word& alpha, WordMode mode = WordMode::Position) const;

  // If (f_1^n, phase) repeats for some n <= limit, the iterates are
  // eventually periodic and quantifiers over n become exact. Returns
  // (preperiod, cycle) in the same convention as CompositionTrace.
  std::optional<std::pair<std::size_t, std::size_t>> exact_trace(std::size_t limit) const;

  std::vector<std::size_t> used() const { return seq_.used_indices(); }

 private:
  ShiftSpace space_;
  std::vector<BlockCode> family_;
  SequenceSpec seq_;
  std::size_t max_window_;
  mutable std::deque<BlockCode> iterates_;  // deque: references stay valid as it grows
};

}  // namespace transit
