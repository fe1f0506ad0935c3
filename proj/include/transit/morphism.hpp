#pragma once

#include "transit/report.hpp"
#include "transit/system.hpp"

#include <string>
#include <vector>

namespace transit {

// A map X → Y between finite spaces.
struct PointMap {
  std::vector<Point> table;
  std::size_t codomain = 0;

  // Throws Error(InvalidMap) on an out-of-range entry.
  PointMap(std::vector<Point> t, std::size_t codomain_size);
  PointMap() = default;

  Point operator()(Point x) const { return table[x]; }
  std::size_t domain() const noexcept { return table.size(); }
  bool is_surjective() const;
  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& b) const;
  std::string to_string() const;

  friend bool operator==(const PointMap&, const PointMap&) = default;
};

enum class MorphismMode { Semi, Strong };

std::string_view to_string(MorphismMode m) noexcept;

// π : (X, f) → (Y, g).
struct MorphismSpec {
  Ndds domain;
  Ndds codomain;
  PointMap pi;
  MorphismMode mode = MorphismMode::Semi;
};

// Semi: π∘f_1^n = g_1^n∘π for every n. Strong: π∘f_n = g_n∘π for every n.
// Both are exact: the n range covers both preperiods and the lcm of the
// cycles. Throws Error(PiNotSurjective).
Verdict verify_morphism(const MorphismSpec& m);

// Properties carried from domain to codomain. Throws Error(InvalidMorphism)
// if verify_morphism fails.
Report preservation_suite(const MorphismSpec& m);

// ---------------------------------------------------------------------------
// Products

struct ProductSystem {
  Ndds system;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  PointMap proj_left;
  PointMap proj_right;

  Point pair(Point a, Point b) const { return static_cast<Point>(a * right_size + b); }
};

// (f_n × g_n) on X × Y with the max metric. The product sequence has prefix
// length max(prefixes) and period lcm(periods).
ProductSystem product(const Ndds& a, const Ndds& b);
// Same dynamics on the discrete product metric, for callers that only use
// set equalities.
ProductSystem product_discrete(const Ndds& a, const Ndds& b);

// Projections are strong semiconjugacies; factor and mixing transfers.
Report product_suite(const Ndds& a, const Ndds& b);

// ---------------------------------------------------------------------------
// Rearrangements

// g_n = f_{ρ(n)} for a bijection ρ of the positive integers.
//   Finite: ρ(n) = perm[n-1] + 1 for n <= perm.size(), identity beyond.
//   Block:  positions offset+1, offset+2, ... split into blocks of length
//           perm.size(), each permuted by perm; positions <= offset fixed.
struct Rearrangement {
  enum class Kind { Finite, Block };
  Kind kind = Kind::Finite;
  std::vector<std::size_t> perm;  // a permutation of 0..perm.size()-1
  std::size_t offset = 0;

  // Throws Error(InvalidSequence) if perm is not a permutation.
  void validate() const;
  std::size_t apply(std::size_t n) const;  // ρ(n)
  // For finite rearrangements: f_i = g_i for every i > N.
  std::size_t identity_from() const { return perm.size(); }
  std::string to_string() const;
};

Ndds rearranged(const Ndds& sys, const Rearrangement& rho);

// Whether all used maps commute pairwise.
bool commuting_family(const Ndds& sys);

// Throws Error(MapsDoNotCommute); for block rearrangements also
// Error(NotSurjective).
Report rearrangement_suite(const Ndds& sys, const Rearrangement& rho);

}  // namespace transit
