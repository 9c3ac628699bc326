#pragma once

#include <cmath>
#include <string_view>
#include <type_traits>

#include "tridecomp/errors.hpp"
#include "tridecomp/program/helpers.hpp"
#include "tridecomp/program/objective.hpp"

namespace tridecomp::program {

// The root of 7d^2 - 7d + 1 in [0, 1/4): (7 - sqrt 21)/14, the largest d with
// 3d(1-d)/(1-2d)^2 <= 1.
template <Scalar S>
S solve_threshold() {
  if constexpr (std::is_same_v<S, Surd21>) {
    return Surd21(Rational(1, 2), Rational(-1, 14));
  } else {
    static_assert(!is_exact_v<S>, "the threshold is irrational; use Surd21 for exact work");
    // 2 / (7 + sqrt 21) avoids the cancellation in 7 - sqrt 21.
    return S(2) / (S(7) + std::sqrt(S(21)));
  }
}

enum class Verdict { certified_le_1, exceeds_1, unverified };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_le_1: return "certified_le_1";
    case Verdict::exceeds_1: return "exceeds_1";
    case Verdict::unverified: return "unverified";
  }
  return "?";
}

template <Scalar S>
struct Certificate {
  Verdict verdict = Verdict::unverified;
  S d{};
  S value{};  // 3d(1-d)/(1-2d)^2
  // Pointwise claims behind b = 0 and a = 0 being optimal, checked at this d.
  bool lemma_range = false;  // d <= 1/5, where the claims are stated
  S e_quotient_max{};        // max over [0,d] of F(b)/b; convex in b, so an endpoint
  bool e_quotient_ok = false;
  S h1_corner{};  // H1(d,d)
  S quadratic{};  // 26d^2 - 15d + 2
  bool h1_ok = false;
};

// Evaluates the closed-form optimum and re-validates the two pointwise claims it
// rests on before certifying it is at most 1.
template <Scalar S>
Certificate<S> certify(const S& d) {
  if (!(d > S(0)) || !(d < ratio<S>(1, 4))) throw DomainError("0 < d < 1/4");
  Certificate<S> c;
  c.d = d;
  c.value = formula::closed_form(d);
  c.lemma_range = !(d > ratio<S>(1, 5));
  const S at0 = helper_E_quotient(S(0), d);
  const S atd = helper_E_quotient(d, d);
  c.e_quotient_max = at0 > atd ? at0 : atd;
  c.e_quotient_ok = !(c.e_quotient_max > S(0));
  c.h1_corner = helper_H1_corner(d);
  c.quadratic = helper_quadratic(d);
  c.h1_ok = !(c.quadratic < S(0)) && !(c.h1_corner > S(2));
  if (c.value > S(1)) c.verdict = Verdict::exceeds_1;
  else if (c.lemma_range && c.e_quotient_ok && c.h1_ok) c.verdict = Verdict::certified_le_1;
  else c.verdict = Verdict::unverified;
  return c;
}

}  // namespace tridecomp::program
