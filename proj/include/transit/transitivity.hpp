#pragma once

#include "transit/report.hpp"
#include "transit/system.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace transit {

// ---------------------------------------------------------------------------
// Hitting times

// N(U,V) as an eventually periodic subset of {1, 2, ...}: membership of
// n = 1..s is listed in `preperiod`, then `cycle` repeats.
struct HitSet {
  std::vector<bool> preperiod;
  std::vector<bool> cycle;
  bool exact = true;

  bool contains(std::size_t n) const;
  bool empty() const;
  bool infinite() const;
  bool cofinite() const;
  std::optional<std::size_t> first() const;
  // Membership bits, e.g. "pre=10 cyc=0100".
  std::string to_string() const;
};

HitSet hitting_set(const Ndds& sys, const PointSet& u, const PointSet& v);
// Truncated: membership for n <= horizon, exact = false.
HitSet hitting_set(const ShiftNdds& sys, const CylinderSet& u, const CylinderSet& v, std::size_t horizon,
                   std::size_t depth);

// N_e(U,V) restricted to words over a finite alphabet: one representative
// sequence position per used map (Position mode) or the 1-based family
// indices (Family mode).
struct WordHitSet {
  std::vector<Word> words;  // witnesses with |α| <= bound, length-lex order (capped)
  std::size_t bound = 0;
  bool saturated = true;    // nonemptiness below is exact
  bool nonempty = false;
  bool infinite = false;
  std::optional<Word> shortest;
};

WordHitSet extended_hitting_set(const Ndds& sys, const PointSet& u, const PointSet& v, std::size_t bound,
                                WordMode mode = WordMode::Position, std::size_t max_listed = 256);

// ---------------------------------------------------------------------------
// Properties and deciders

enum class PropertyId { TT, ExtTT, ST, StrongExtTT, VST, ExtMinimal, Exact, FullyExact, ExactTT, StrongExactTT, TM, LEO };

inline constexpr PropertyId kAllProperties[] = {
    PropertyId::TT,  PropertyId::ExtTT,      PropertyId::ST,         PropertyId::StrongExtTT,
    PropertyId::VST, PropertyId::ExtMinimal, PropertyId::Exact,      PropertyId::FullyExact,
    PropertyId::ExactTT, PropertyId::StrongExactTT, PropertyId::TM, PropertyId::LEO};

std::string_view to_string(PropertyId p) noexcept;
// Case-insensitive; accepts the short names above. Throws Error(UnknownVariant).
PropertyId parse_property(std::string_view s);

// Condition ids, "i" first (the definition).
const std::vector<std::string>& variants(PropertyId p);
// Conditions whose equivalence needs a perfect space.
bool perfect_only(PropertyId p, std::string_view variant);

struct Decision {
  Verdict verdict = Verdict::yes();
  // For False: the counterexample, e.g. "U={1} V={0}". For True: the
  // witness when there is one (a point, a word, the uniform k).
  std::string witness;
  std::optional<std::size_t> k;
};

struct DecideOptions {
  bool allow_imperfect = false;
};

// Exact on the finite backend. Open sets are quantified through the
// singleton basis: every condition here is monotone in the open sets, so it
// holds for all nonempty sets iff it holds for all singletons.
// Throws Error(UnknownVariant), Error(PerfectSpaceRequired).
Decision decide(const Ndds& sys, PropertyId p, std::string_view variant = "i", const DecideOptions& opt = {});

// Symbolic backend: open sets range over cylinders of depth cfg.depth and n
// over 1..cfg.horizon. False only with a certain counterexample.
Decision decide(const ShiftNdds& sys, PropertyId p, std::string_view variant, const SymbolicConfig& cfg);

// ---------------------------------------------------------------------------
// Suites

// Runs every applicable condition of the property's characterization and
// asserts the agreements that hold on this backend. One record per asserted
// relation; a False record is a disagreement.
Report equivalence_suite(const Ndds& sys, PropertyId p);
Report equivalence_suite(const ShiftNdds& sys, PropertyId p, const SymbolicConfig& cfg);

// Separate from the VST group: VST ⇔ ST ⇔ "no proper nonempty closed strong -
// invariant set", asserted for surjective open families.
Report vst_open_map_suite(const Ndds& sys);

// The implication diagram between the properties.
Report implication_lattice_check(const Ndds& sys);

struct TransitivePoints {
  PointSet by_definition;  // dense orbit
  PointSet by_omega;       // ω(x) = X
};
TransitivePoints transitive_points(const Ndds& sys);
TransitivePoints extended_transitive_points(const Ndds& sys);

// Consequences of TT and ST for invariant sets.
Report corollary_checks(const Ndds& sys);

// Set-level laws of the orbit notions (inclusions and invariance of J, J^-,
// orbit closure) and the hitting-time representation.
Report orbit_laws(const Ndds& sys);

}  // namespace transit
