#pragma once

#include "transit/report.hpp"
#include "transit/system.hpp"

#include <string_view>
#include <utility>

namespace transit {

enum class InvarianceKind {
  PlusInv,          // f_1^n(A) ⊆ A
  StrongPlusInv,    // f_n(A) ⊆ A
  MinusInv,         // f_1^{-n}(A) ⊆ A
  StrongMinusInv,   // f_n^{-1}(A) ⊆ A
  WeaklyMinusInv,   // A ⊆ f_1^n(A)
  ExtendedMinusInv, // A ⊆ f_n(A)
  Invariant,        // f_1^n(A) = A
};

std::string_view to_string(InvarianceKind k) noexcept;
// Accepts the names above and kebab forms such as "strong-plus". Throws
// Error(UnknownVariant).
InvarianceKind parse_invariance(std::string_view s);
inline constexpr InvarianceKind kAllInvariance[] = {
    InvarianceKind::PlusInv,        InvarianceKind::StrongPlusInv,    InvarianceKind::MinusInv,
    InvarianceKind::StrongMinusInv, InvarianceKind::WeaklyMinusInv,   InvarianceKind::ExtendedMinusInv,
    InvarianceKind::Invariant};

// Exact on the finite backend: n-quantified kinds range over the trace,
// family-quantified kinds over the used maps.
Verdict check_invariance(const Ndds& sys, const PointSet& a, InvarianceKind kind);
// Symbolic: family kinds are exact, n-kinds are checked for n <= horizon.
Verdict check_invariance(const ShiftNdds& sys, const CylinderSet& a, InvarianceKind kind, std::size_t horizon);

// (A weakly - invariant, f_1^n(A ∩ f_1^{-n}(A)) = A for every n)
std::pair<bool, bool> weakly_minus_inv_characterization(const Ndds& sys, const PointSet& a);
// (A extended - invariant, f_n(A ∩ f_n^{-1}(A)) = A for every used f_n)
std::pair<bool, bool> extended_minus_inv_characterization(const Ndds& sys, const PointSet& a);

// Duality of + and - invariance under complement, ordinary and strong.
Report duality_suite(const Ndds& sys, const PointSet& a);

// Clause-by-clause implication checks for surjective families. Throw
// Error(PreconditionViolated) when some used map is not surjective.
Report lemma5_suite(const Ndds& sys, const PointSet& a);
Report lemma6_suite(const Ndds& sys, const PointSet& a);

// The invariance laws that hold for every system: duality, the two
// characterizations, invariant ⇔ f_n(A) = A, and the J / J^- links.
Report invariance_laws(const Ndds& sys, const PointSet& a);

}  // namespace transit
