#pragma once

#include <cstdint>

#include "tridecomp/errors.hpp"
#include "tridecomp/program/domain.hpp"
#include "tridecomp/program/point.hpp"

namespace tridecomp::program {

// Objectives in closed form. Each takes the level's variables plus d; no domain check.
namespace formula {

template <Scalar S>
S level3(const S& e0, const S& e, const S& f, const S& q0, const S& q, const S& p, const S& r0, const S& r) {
  const S one(1);
  const S cancel0 = one / q0 * (one / e - one / e0);
  return e0 * r0 * (cancel0 + r * (one / p * (one / q * (one / e - one / f) + cancel0)));
}

template <Scalar S>
S level4(const S& e0, const S& e, const S& f, const S& q0, const S& q, const S& p, const S& r0, const S& r) {
  return r0 * ramp<S>(e0 - e) / (q0 * e) + e0 * r0 * r * ramp<S>(f - e) / (p * q * e * f) +
         e0 * r0 * r * ramp<S>(e0 - e) / (p * q0 * e * e0);
}

template <Scalar S>
S level5(const S& y, const S& e0, const S& e, const S& f, const S& q0) {
  const S k5 = q0 + f - y;
  return e0 * ramp<S>(e0 - e) / (q0 * e) + e0 * e0 * q0 * ramp<S>(f - e) / (k5 * (e + f - y) * e * f) +
         e0 * ramp<S>(e0 - e) / (k5 * e);
}

template <Scalar S>
S level6(const S& x, const S& y, const S& e0, const S& e, const S& f) {
  const S k4 = e + e0 - x;
  const S k5 = k4 + f - y;
  return e0 * ramp<S>(e0 - e) / (k4 * e) + e0 * e0 * k4 * ramp<S>(f - e) / (k5 * (e + f - y) * e * f) +
         e0 * ramp<S>(e0 - e) / (k5 * e);
}

// Level 7 in the (x, y, e0, f) variables, before switching to a = x - e0, b = y - f.
template <Scalar S>
S level7_edges(const S& x, const S& y, const S& e0, const S& f) {
  const S one(1);
  const S s = x + y - one;
  return e0 * ramp<S>(e0 - s) / ((e0 + y - one) * s) +
         e0 * e0 * (y - one + e0) * ramp<S>(f - s) / ((e0 + f - one) * (x - one + f) * s * f) +
         e0 * ramp<S>(e0 - s) / ((e0 + f - one) * s);
}

template <Scalar S>
S level7(const S& x, const S& y, const S& a, const S& b) {
  const S one(1);
  const S s = x + y - one;
  return (x - a) * ramp<S>(one - y - a) / ((s - a) * s) +
         (x - a) * (x - a) * (s - a) * ramp<S>(one - x - b) / ((s - a - b) * (s - b) * s * (y - b)) +
         (x - a) * ramp<S>(one - y - a) / ((s - a - b) * s);
}

template <Scalar S>
S level8(const S& x, const S& a, const S& b, const S& d) {
  const S one(1);
  const S xd = x - d;
  return (x - a) * ramp<S>(d - a) / ((xd - a) * xd) +
         (x - a) * (x - a) * (xd - a) * ramp<S>(one - x - b) / ((xd - a - b) * (xd - b) * xd * (one - d - b)) +
         (x - a) * ramp<S>(d - a) / ((xd - a - b) * xd);
}

template <Scalar S>
S level9(const S& a, const S& b, const S& d) {
  const S one(1);
  const S m = one - S(2) * d;
  const S x = one - d;
  return (x - a) * (d - a) / ((m - a) * m) +
         (x - a) * (x - a) * (m - a) * (d - b) / ((m - a - b) * (m - b) * m * (x - b)) +
         (x - a) * (d - a) / ((m - a - b) * m);
}

template <Scalar S>
S level10(const S& b, const S& d) {
  const S one(1);
  const S m = one - S(2) * d;
  const S x = one - d;
  return x * d / (m * m) + x * x * (d - b) / ((m - b) * (m - b) * (x - b)) + x * d / ((m - b) * m);
}

// 3d(1-d)/(1-2d)^2, the value of level 10 at b = 0.
template <Scalar S>
S closed_form(const S& d) {
  const S m = S(1) - S(2) * d;
  return S(3) * d * (S(1) - d) / (m * m);
}

}  // namespace formula

// Level 1 sums every inner term with weight 1/n; level 2 keeps one inner term per
// outer index, weighted by r_i.
template <Scalar S>
S eval_vector_objective(const ProgramPoint<S>& pt) {
  if (pt.level() != 1 && pt.level() != 2) throw std::invalid_argument("vector objective needs level 1 or 2");
  if (const DomainCheck c = check_domain(pt); !c) throw DomainError(c.violated);
  const S one(1);
  const S e0 = pt[Var::e0];
  const S inv_n = ratio<S>(1, static_cast<std::int64_t>(pt.vertex_count()));
  S total(0);
  for (const OuterTerm<S>& t : pt.outer()) {
    const S cancel0 = one / t.q0 * (one / t.e - one / e0);
    S inner_sum(0);
    for (const InnerTerm<S>& u : t.inner) inner_sum += one / u.p * (one / u.q * (one / t.e - one / u.f) + cancel0);
    total += cancel0 + (pt.level() == 1 ? inv_n : t.r) * inner_sum;
  }
  return e0 * inv_n * total;
}

// Objective without the domain check (levels 3..10).
template <Scalar S>
S objective_unchecked(const ProgramPoint<S>& pt) {
  using enum Var;
  const S& d = pt.d();
  switch (pt.level()) {
    case 3: return formula::level3(pt[e0], pt[e], pt[f], pt[q0], pt[q], pt[p], pt[r0], pt[r]);
    case 4: return formula::level4(pt[e0], pt[e], pt[f], pt[q0], pt[q], pt[p], pt[r0], pt[r]);
    case 5: return formula::level5(pt[y], pt[e0], pt[e], pt[f], pt[q0]);
    case 6: return formula::level6(pt[x], pt[y], pt[e0], pt[e], pt[f]);
    case 7: return formula::level7(pt[x], pt[y], pt[a], pt[b]);
    case 8: return formula::level8(pt[x], pt[a], pt[b], d);
    case 9: return formula::level9(pt[a], pt[b], d);
    case 10: return formula::level10(pt[b], d);
    default: throw std::invalid_argument("scalar objective needs level 3..10");
  }
}

// The level's objective; ramps apply at levels 4-8. Off-domain points raise DomainError.
template <Scalar S>
S eval_objective(const ProgramPoint<S>& pt) {
  if (pt.level() <= 2) return eval_vector_objective(pt);
  if (const DomainCheck c = check_domain(pt); !c) throw DomainError(c.violated);
  return objective_unchecked(pt);
}

}  // namespace tridecomp::program
