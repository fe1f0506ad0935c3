#pragma once

#include "transit/system.hpp"

#include <cstddef>

namespace transit {

struct OrbitResult {
  PointSet points;
  std::size_t horizon = 0;  // largest n (or word length) examined
  bool closed = true;       // false: truncated, points is a subset of the true orbit
};

enum class OmegaKind { Omega, ExtendedOmega };

struct OmegaSet {
  PointSet points;
  OmegaKind kind = OmegaKind::Omega;
};

// O(x) = {f_1^n(x) : n >= 1}; x itself only if revisited.
OrbitResult orbit(const Ndds& sys, Point x);
PointSet partial_orbit(const Ndds& sys, Point x, std::size_t N);
// O^-(x) = union of f_1^{-n}(x)
OrbitResult negative_orbit(const Ndds& sys, Point x);
PointSet partial_negative_orbit(const Ndds& sys, Point x, std::size_t N);

// J(x) and J^-(x): reachability along the maps {f_n}. Exact; max_len is
// accepted for API symmetry with the symbolic backend and ignored.
OrbitResult extended_orbit(const Ndds& sys, Point x, std::size_t max_len = 0);
OrbitResult extended_negative_orbit(const Ndds& sys, Point x, std::size_t max_len = 0);

// Points attained infinitely often by f_1^n(x).
OmegaSet omega_limit(const Ndds& sys, Point x);
// Points reachable from x by words of every length: reachable from a vertex
// on a cycle of the application graph that is itself reachable from x.
OmegaSet extended_omega_limit(const Ndds& sys, Point x);

Verdict is_recurrent(const Ndds& sys, Point x);

// Set-valued helpers shared by the deciders.
PointSet forward_union(const Ndds& sys, const PointSet& u);    // ∪_n f_1^n(U)
PointSet backward_union(const Ndds& sys, const PointSet& u);   // ∪_n f_1^{-n}(U)
PointSet extended_image(const Ndds& sys, const PointSet& u);   // ∪_α f_α(U)
PointSet extended_preimage(const Ndds& sys, const PointSet& u);// ∪_α f_α^{-1}(U)

// Symbolic backend. A point is given by a word standing for its cylinder.
// Both unions are taken over n <= N and are exact as cylinder sets at the
// stated depth (forward) or exactly (backward).
CylinderSet partial_orbit(const ShiftNdds& sys, const Block& x, std::size_t N, std::size_t depth);
CylinderSet partial_negative_orbit(const ShiftNdds& sys, const Block& x, std::size_t N);

}  // namespace transit
