#include "transit/orbit.hpp"

#include "transit/error.hpp"

#include <deque>

namespace transit {

namespace {

// Fixed point of S -> S ∪ step(S) starting from step(start).
template <class Step>
PointSet saturate(const PointSet& start, Step step) {
  PointSet cur = step(start);
  while (true) {
    PointSet next = cur | step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

PointSet one_step_image(const Ndds& sys, const PointSet& s) {
  PointSet out(sys.size());
  for (auto i : sys.used()) out |= sys.family()[i].image(s);
  return out;
}

PointSet one_step_preimage(const Ndds& sys, const PointSet& s) {
  PointSet out(sys.size());
  for (auto i : sys.used()) out |= sys.family()[i].preimage(s);
  return out;
}

}  // namespace

OrbitResult orbit(const Ndds& sys, Point x) {
  sys.space().check_point(x);
  const auto& tr = sys.trace();
  PointSet pts(sys.size());
  for (const auto& g : tr.maps()) pts.insert(g(x));
  return {pts, tr.length(), true};
}

PointSet partial_orbit(const Ndds& sys, Point x, std::size_t N) {
  sys.space().check_point(x);
  PointSet pts(sys.size());
  for (std::size_t n = 1; n <= std::min(N, sys.trace().length()); ++n) pts.insert(sys.iterate(n)(x));
  return pts;
}

OrbitResult negative_orbit(const Ndds& sys, Point x) {
  sys.space().check_point(x);
  const auto& tr = sys.trace();
  PointSet pts(sys.size());
  auto target = PointSet::singleton(sys.size(), x);
  for (const auto& g : tr.maps()) pts |= g.preimage(target);
  return {pts, tr.length(), true};
}

PointSet partial_negative_orbit(const Ndds& sys, Point x, std::size_t N) {
  sys.space().check_point(x);
  PointSet pts(sys.size());
  auto target = PointSet::singleton(sys.size(), x);
  for (std::size_t n = 1; n <= std::min(N, sys.trace().length()); ++n) pts |= sys.iterate(n).preimage(target);
  return pts;
}

OrbitResult extended_orbit(const Ndds& sys, Point x, std::size_t) {
  sys.space().check_point(x);
  auto pts = saturate(PointSet::singleton(sys.size(), x), [&](const PointSet& s) { return one_step_image(sys, s); });
  return {pts, sys.size(), true};
}

OrbitResult extended_negative_orbit(const Ndds& sys, Point x, std::size_t) {
  sys.space().check_point(x);
  auto pts =
      saturate(PointSet::singleton(sys.size(), x), [&](const PointSet& s) { return one_step_preimage(sys, s); });
  return {pts, sys.size(), true};
}

OmegaSet omega_limit(const Ndds& sys, Point x) {
  sys.space().check_point(x);
  PointSet pts(sys.size());
  for (auto n : sys.trace().cycle_indices()) pts.insert(sys.iterate(n)(x));
  return {pts, OmegaKind::Omega};
}

OmegaSet extended_omega_limit(const Ndds& sys, Point x) {
  sys.space().check_point(x);
  const auto n = sys.size();
  // Vertices on a cycle: v ∈ J(v).
  PointSet reach_from_x = extended_orbit(sys, x).points;
  reach_from_x.insert(x);
  PointSet cyclic(n);
  reach_from_x.for_each([&](Point v) {
    if (extended_orbit(sys, v).points.contains(v)) cyclic.insert(v);
  });
  PointSet out(n);
  cyclic.for_each([&](Point c) { out |= extended_orbit(sys, c).points; });
  return {out, OmegaKind::ExtendedOmega};
}

Verdict is_recurrent(const Ndds& sys, Point x) { return Verdict::from(omega_limit(sys, x).points.contains(x)); }

PointSet forward_union(const Ndds& sys, const PointSet& u) {
  PointSet out(sys.size());
  for (const auto& g : sys.trace().maps()) out |= g.image(u);
  return out;
}

PointSet backward_union(const Ndds& sys, const PointSet& u) {
  PointSet out(sys.size());
  for (const auto& g : sys.trace().maps()) out |= g.preimage(u);
  return out;
}

PointSet extended_image(const Ndds& sys, const PointSet& u) {
  return saturate(u, [&](const PointSet& s) { return one_step_image(sys, s); });
}

PointSet extended_preimage(const Ndds& sys, const PointSet& u) {
  return saturate(u, [&](const PointSet& s) { return one_step_preimage(sys, s); });
}

CylinderSet partial_orbit(const ShiftNdds& sys, const Block& x, std::size_t N, std::size_t depth) {
  auto start = CylinderSet::cylinder(sys.alphabet(), x);
  CylinderSet out(sys.alphabet());
  for (std::size_t n = 1; n <= N; ++n) out = out | sys.iterate(n).image(start, depth);
  return out;
}

CylinderSet partial_negative_orbit(const ShiftNdds& sys, const Block& x, std::size_t N) {
  auto target = CylinderSet::cylinder(sys.alphabet(), x);
  CylinderSet out(sys.alphabet());
  for (std::size_t n = 1; n <= N; ++n) out = out | sys.iterate(n).preimage(target);
  return out;
}

}  // namespace transit
