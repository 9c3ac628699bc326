#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tridecomp/scalar.hpp"

namespace tridecomp::program {

// Auxiliary functions from the final two reductions. All take d last.

// (1-d-s)^2 (1-2d-s) / (1-2d-s-t); increasing in s on [0,d]^2 iff H1 <= 2.
template <Scalar S>
S helper_H(const S& s, const S& t, const S& d) {
  const S one(1);
  const S u = one - d - s;
  const S m = one - S(2) * d - s;
  return u * u * m / (m - t);
}

template <Scalar S>
S helper_H1(const S& s, const S& t, const S& d) {
  const S one(1);
  const S m = one - S(2) * d - s;
  return t * (one - d - s) / (m * (m - t));
}

// H1(d, d) = d(1-2d) / ((1-3d)(1-4d)).
template <Scalar S>
S helper_H1_corner(const S& d) {
  const S one(1);
  return d * (one - S(2) * d) / ((one - S(3) * d) * (one - S(4) * d));
}

// 26d^2 - 15d + 2, non-negative exactly when H1(d, d) <= 2 (for d < 1/4).
template <Scalar S>
S helper_quadratic(const S& d) {
  return S(26) * d * d - S(15) * d + S(2);
}

template <Scalar S>
S helper_G(const S& b, const S& d) {
  const S one(1);
  const S m = one - S(2) * d - b;
  return (one - d) * (one - S(2) * d) * (d - b) / (m * m * (one - d - b)) + d / m;
}

// Numerator of G(b) - G(0) over (1-2d-b)^2 (1-d-b)(1-2d).
template <Scalar S>
S helper_F(const S& b, const S& d) {
  const S one(1);
  const S m = one - S(2) * d;
  const S mb = m - b;
  return m * (S(2) * d * (one - d) * m + b * (d * d + d - one) + b * b * d) - S(2) * d * mb * mb * (one - d - b);
}

// The quadratic printed as E(b) = F(b)/b:
//   (-1 + 5d - 13d^2 - 12d^3) + b(-5d + 10d^2) + 2d b^2.
template <Scalar S>
S helper_E(const S& b, const S& d) {
  const S d2 = d * d;
  return (S(-1) + S(5) * d - S(13) * d2 - S(12) * d2 * d) + b * (S(-5) * d + S(10) * d2) + S(2) * d * b * b;
}

// The actual quotient F(b)/b, which differs from the printed E:
//   (2d - 1)(7d^2 - 7d + 1) + b(8d^2 - 5d) + 2d b^2.
// Its constant term vanishes at the threshold root, so it is <= 0 on [0,d] only up to it.
template <Scalar S>
S helper_E_quotient(const S& b, const S& d) {
  const S d2 = d * d;
  return (S(2) * d - S(1)) * (S(7) * d2 - S(7) * d + S(1)) + b * (S(8) * d2 - S(5) * d) + S(2) * d * b * b;
}

struct HelperSignature {
  std::string_view name;
  std::size_t arity;  // arguments before d
  std::string_view params;
};

inline constexpr std::array<HelperSignature, 6> kHelpers{{
    {"E", 1, "b"},
    {"E_quotient", 1, "b"},
    {"F", 1, "b"},
    {"G", 1, "b"},
    {"H", 2, "s,t"},
    {"H1", 2, "s,t"},
}};

inline const HelperSignature& helper_signature(std::string_view name) {
  for (const auto& h : kHelpers)
    if (h.name == name) return h;
  throw std::invalid_argument("unknown helper function: " + std::string(name));
}

// Evaluates a helper by name. args holds the helper's arguments without d.
template <Scalar S>
S lemma_fn(std::string_view name, std::span<const S> args, const S& d) {
  const HelperSignature& sig = helper_signature(name);
  if (args.size() != sig.arity)
    throw std::invalid_argument(std::string(name) + " takes " + std::to_string(sig.arity) + " argument(s) (" +
                                std::string(sig.params) + ")");
  if (name == "E") return helper_E(args[0], d);
  if (name == "E_quotient") return helper_E_quotient(args[0], d);
  if (name == "F") return helper_F(args[0], d);
  if (name == "G") return helper_G(args[0], d);
  if (name == "H") return helper_H(args[0], args[1], d);
  return helper_H1(args[0], args[1], d);
}

template <Scalar S>
S lemma_fn(std::string_view name, std::initializer_list<S> args, const S& d) {
  return lemma_fn<S>(name, std::span<const S>(args.begin(), args.size()), d);
}

}  // namespace tridecomp::program
