#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace tridecomp {

namespace detail {
constexpr bool is_perfect_square(long v) {
  for (long r = 0; r * r <= v; ++r) {
    if (r * r == v) return true;
  }
  return false;
}
}  // namespace detail

// Exact element a + b*sqrt(Radicand) of the real quadratic field Q(sqrt(Radicand)).
// Ordering is exact: the sign of a + b*sqrt(D) is decided by comparing a^2 and D*b^2.
template <long Radicand>
class QuadraticSurd {
  static_assert(Radicand > 1 && !detail::is_perfect_square(Radicand),
                "radicand must be a positive non-square");

 public:
  QuadraticSurd() = default;
  QuadraticSurd(int v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(long v) : rational_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticSurd(mpq_class rational, mpq_class surd = 0)  // NOLINT(google-explicit-constructor)
      : rational_(std::move(rational)), surd_(std::move(surd)) {}

  static QuadraticSurd sqrt_radicand() { return {mpq_class(0), mpq_class(1)}; }
  static constexpr long radicand() { return Radicand; }

  const mpq_class& rational_part() const noexcept { return rational_; }
  const mpq_class& surd_part() const noexcept { return surd_; }
  bool is_rational() const { return sgn(surd_) == 0; }

  QuadraticSurd conjugate() const { return {rational_, -surd_}; }
  // a^2 - D b^2, the field norm.
  mpq_class norm() const { return mpq_class(rational_ * rational_ - Radicand * surd_ * surd_); }

  int sign() const {
    const int sa = sgn(rational_);
    const int sb = sgn(surd_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const int cmp = ::cmp(mpq_class(rational_ * rational_), mpq_class(Radicand * surd_ * surd_));
    if (cmp > 0) return sa;
    if (cmp < 0) return sb;
    return 0;
  }

  QuadraticSurd operator-() const { return {-rational_, -surd_}; }

  QuadraticSurd& operator+=(const QuadraticSurd& o) {
    rational_ += o.rational_;
    surd_ += o.surd_;
    return *this;
  }
  QuadraticSurd& operator-=(const QuadraticSurd& o) {
    rational_ -= o.rational_;
    surd_ -= o.surd_;
    return *this;
  }
  QuadraticSurd& operator*=(const QuadraticSurd& o) {
    mpq_class a = rational_ * o.rational_ + Radicand * surd_ * o.surd_;
    mpq_class b = rational_ * o.surd_ + surd_ * o.rational_;
    rational_ = std::move(a);
    surd_ = std::move(b);
    return *this;
  }
  QuadraticSurd& operator/=(const QuadraticSurd& o) {
    const mpq_class n = o.norm();
    if (sgn(n) == 0) throw std::domain_error("QuadraticSurd: division by zero");
    *this *= o.conjugate();
    rational_ /= n;
    surd_ /= n;
    return *this;
  }

  friend QuadraticSurd operator+(QuadraticSurd l, const QuadraticSurd& r) { return l += r; }
  friend QuadraticSurd operator-(QuadraticSurd l, const QuadraticSurd& r) { return l -= r; }
  friend QuadraticSurd operator*(QuadraticSurd l, const QuadraticSurd& r) { return l *= r; }
  friend QuadraticSurd operator/(QuadraticSurd l, const QuadraticSurd& r) { return l /= r; }

  friend bool operator==(const QuadraticSurd& l, const QuadraticSurd& r) {
    return l.rational_ == r.rational_ && l.surd_ == r.surd_;
  }
  friend std::strong_ordering operator<=>(const QuadraticSurd& l, const QuadraticSurd& r) {
    const int s = (l - r).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  double to_double() const {
    // Opposite signs cancel; go through the norm to keep relative accuracy.
    const long double root = std::sqrt(static_cast<long double>(Radicand));
    const long double a = rational_.get_d();
    const long double bs = surd_.get_d() * root;
    if (sgn(rational_) * sgn(surd_) < 0) {
      return static_cast<double>(static_cast<long double>(norm().get_d()) / (a - bs));
    }
    return static_cast<double>(a + bs);
  }

  std::string to_string() const {
    if (is_rational()) return rational_.get_str();
    std::string out;
    if (sgn(rational_) != 0) out = rational_.get_str() + (sgn(surd_) > 0 ? " + " : " - ");
    else if (sgn(surd_) < 0) out = "-";
    out += mpq_class(abs(surd_)).get_str() + "*sqrt(" + std::to_string(Radicand) + ")";
    return out;
  }

 private:
  mpq_class rational_{0};
  mpq_class surd_{0};
};

}  // namespace tridecomp
