#pragma once

#include <cctype>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tridecomp/quadratic_field.hpp"

namespace tridecomp {

using Rational = mpq_class;

// Exact numbers of Q(sqrt 21); the threshold d* = (7 - sqrt 21) / 14 lives here.
using Surd21 = QuadraticSurd<21>;

enum class NumericMode { floating, exact };

inline std::string_view to_string(NumericMode m) {
  return m == NumericMode::exact ? "exact" : "float";
}

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double ratio(std::int64_t p, std::int64_t q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static double to_double(double v) { return v; }
  // Absolute slack used by interval checks on floating points.
  static double slack() { return 1e-12; }
  static std::string to_string(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }
};

template <>
struct ScalarTraits<long double> {
  static constexpr bool exact = false;
  static long double ratio(std::int64_t p, std::int64_t q) {
    return static_cast<long double>(p) / static_cast<long double>(q);
  }
  static double to_double(long double v) { return static_cast<double>(v); }
  static long double slack() { return 1e-15L; }
  static std::string to_string(long double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    return buf;
  }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static Rational ratio(std::int64_t p, std::int64_t q) {
    Rational r{static_cast<long>(p), static_cast<long>(q)};
    r.canonicalize();
    return r;
  }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational slack() { return 0; }
  static std::string to_string(const Rational& v) { return v.get_str(); }
};

template <long D>
struct ScalarTraits<QuadraticSurd<D>> {
  static constexpr bool exact = true;
  static QuadraticSurd<D> ratio(std::int64_t p, std::int64_t q) {
    return QuadraticSurd<D>{ScalarTraits<Rational>::ratio(p, q)};
  }
  static double to_double(const QuadraticSurd<D>& v) { return v.to_double(); }
  static QuadraticSurd<D> slack() { return 0; }
  static std::string to_string(const QuadraticSurd<D>& v) { return v.to_string(); }
};

template <class S>
concept Scalar = requires(const S& a, const S& b) {
  { ScalarTraits<S>::exact } -> std::convertible_to<bool>;
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a / b } -> std::convertible_to<S>;
  { a < b } -> std::convertible_to<bool>;
};

template <Scalar S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

template <Scalar S>
S ratio(std::int64_t p, std::int64_t q) {
  return ScalarTraits<S>::ratio(p, q);
}

template <Scalar S>
S from_int(std::int64_t v) {
  return ScalarTraits<S>::ratio(v, 1);
}

template <Scalar S>
double to_double(const S& v) {
  return ScalarTraits<S>::to_double(v);
}

// Exact embedding of a binary double (no rounding in exact modes).
template <Scalar S>
S from_double(double v) {
  if constexpr (is_exact_v<S>) {
    return S(Rational(v));
  } else {
    return static_cast<S>(v);
  }
}

template <Scalar S>
std::string scalar_string(const S& v) {
  return ScalarTraits<S>::to_string(v);
}

// w^+ = max(w, 0).
template <Scalar S>
S ramp(const S& v) {
  if (v > S(0)) return v;
  return S(0);
}

template <Scalar S>
S abs_value(const S& v) {
  if (v < S(0)) return S(0) - v;
  return v;
}

// Parses "p/q", a decimal such as "0.1726" or "-1.5e-3", or an integer, exactly.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty number");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0)
      throw std::invalid_argument("bad fraction: " + s);
    r.canonicalize();
    return r;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
      seen_digit = true;
      if (seen_point) ++scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad number: " + s);
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("bad number: " + s);
    try {
      std::size_t used = 0;
      exponent = std::stol(s.substr(pos + 1), &used);
      if (pos + 1 + used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent: " + s);
    }
  }
  mpz_class num(digits, 10);
  if (negative) num = -num;
  const long shift = exponent - scale;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  r.canonicalize();
  return r;
}

}  // namespace tridecomp
