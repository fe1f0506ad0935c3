#pragma once

#include "transit/morphism.hpp"
#include "transit/orbit.hpp"
#include "transit/report.hpp"
#include "transit/system.hpp"
#include "transit/transitivity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace transit {

// A family F of self-maps of a finite space.
//   Explicit: the listed maps, F finite with the discrete topology.
//   Iterate:  F = {f_1^n : n >= 1} of an NDDS, indexed by n with the discrete
//             topology on the indices; compact subsets are finite index sets.
class GdsFamily {
 public:
  enum class Kind { Explicit, Iterate };

  // Throws Error(InvalidMap) for an empty list or a size mismatch.
  static GdsFamily explicit_family(FiniteSpace space, std::vector<FiniteMap> maps);
  static GdsFamily iterate_family(const Ndds& sys);

  Kind kind() const noexcept { return kind_; }
  const FiniteSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_.size(); }
  // Distinct member maps, in first-appearance order.
  const std::vector<FiniteMap>& members() const noexcept { return members_; }
  // Source system of an iterate family.
  const Ndds& source() const;

  // Members are closed under composition.
  bool is_semigroup() const;
  bool all_surjective() const;

 private:
  GdsFamily(Kind k, FiniteSpace s, std::vector<FiniteMap> m, std::optional<Ndds> src);
  Kind kind_;
  FiniteSpace space_;
  std::vector<FiniteMap> members_;
  std::optional<Ndds> source_;
};

PointSet family_image(const GdsFamily& f, const PointSet& a);     // F(A)
PointSet family_preimage(const GdsFamily& f, const PointSet& b);  // F^{-1}(B)

OrbitResult gds_orbit(const GdsFamily& f, Point x);           // compositions of length >= 1
OrbitResult gds_negative_orbit(const GdsFamily& f, Point x);
// Limit points of the orbit: everything reachable from a recurrent point of
// the orbit graph.
PointSet gds_omega(const GdsFamily& f, Point x);
PointSet gds_transitive_points(const GdsFamily& f);  // Trans(F)

// F(A) ∩ B ≠ ∅ ⇔ A ∩ F^{-1}(B) ≠ ∅ and F(x) ∩ B ≠ ∅ ⇔ x ∈ F^{-1}(B), plus
// the + invariance duality and the semigroup invariance facts.
Report gds_equation_checks(const GdsFamily& f, const PointSet& a, const PointSet& b, Point x);

// A is F-transitive: for opene U, V meeting A some composition maps U ∩ A
// into V.
Verdict is_f_transitive_set(const GdsFamily& f, const PointSet& a);
Report f_transitive_suite(const GdsFamily& f, const PointSet& a);

enum class GdsProperty { TT, ST, VST, Minimal, TM, LEO };
inline constexpr GdsProperty kAllGdsProperties[] = {GdsProperty::TT,      GdsProperty::ST, GdsProperty::VST,
                                                    GdsProperty::Minimal, GdsProperty::TM, GdsProperty::LEO};
std::string_view to_string(GdsProperty p) noexcept;
// Throws Error(UnknownVariant).
GdsProperty parse_gds_property(std::string_view s);

struct GdsOptions {
  // Run VST/TM/LEO on an explicit family, where every subset of F is
  // compact and the conditions degenerate.
  bool allow_degenerate = false;
};

// Throws Error(DegenerateTopology).
Decision gds_decide(const GdsFamily& f, GdsProperty p, const GdsOptions& opt = {});

// Transitivity, dense-invariant, strong transitivity and minimality
// characterizations, each condition evaluated on its own.
Report gds_theorem_suites(const GdsFamily& f);

enum class AssociationMode { Family, Iterate };
// Family: F = {f_n}. Iterate: F = {f_1^n}.
GdsFamily associate(const Ndds& sys, AssociationMode mode);
// Throws Error(NotSurjective) when include_leo is set and a used map is not
// onto.
Report association_suite(const Ndds& sys, bool include_leo);

// Composition closure of the members. Throws Error(ClosureExceedsBound).
GdsFamily semigroup_closure(const GdsFamily& f, std::size_t bound = 4096);
Report closure_suite(const GdsFamily& f, std::size_t bound = 4096);
// NDDS properties carried to the word family {f_α}.
Report word_family_suite(const Ndds& sys, std::size_t bound = 4096);

enum class GdsMorphismMode { Semi, Conj, StrongSemi, StrongConj };
std::string_view to_string(GdsMorphismMode m) noexcept;

struct GdsMorphism {
  GdsFamily domain;
  GdsFamily codomain;
  PointMap phi;
  // h on members, by index into domain.members(). Left empty for iterate
  // families, where h sends f_1^n to g_1^n.
  std::vector<std::size_t> h;
  GdsMorphismMode mode = GdsMorphismMode::Semi;
};

// φ∘f = h(f)∘φ for every member; strong modes need iterate families.
Verdict verify_gds_morphism(const GdsMorphism& m);
// Throws Error(InvalidMorphism).
Report gds_preservation_suite(const GdsMorphism& m);

}  // namespace transit
