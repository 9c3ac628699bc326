#pragma once

#include <string>
#include <vector>

#include "tridecomp/program/point.hpp"

namespace tridecomp::program {

struct DomainCheck {
  bool ok = true;
  std::string violated;  // e.g. "a <= d"; empty when ok
  explicit operator bool() const noexcept { return ok; }
};

namespace detail {

// Collects interval checks in table order and remembers the first failure.
template <Scalar S>
class ConstraintList {
 public:
  ConstraintList() : slack_(ScalarTraits<S>::slack()) {}

  bool failed() const noexcept { return !check_.ok; }
  DomainCheck result() const { return check_; }

  void at_least(const S& v, const S& lo, const std::string& name) {
    if (!failed() && v < lo - slack_) fail(name);
  }
  void at_most(const S& v, const S& hi, const std::string& name) {
    if (!failed() && v > hi + slack_) fail(name);
  }
  void fail(const std::string& name) {
    check_.ok = false;
    check_.violated = name;
  }

 private:
  S slack_;
  DomainCheck check_;
};

template <Scalar S>
void check_d(ConstraintList<S>& c, const S& d) {
  if (!(d > S(0))) c.fail("d > 0");
  else if (!(d < ratio<S>(1, 4))) c.fail("d < 1/4");
}

inline std::string indexed(const char* name, std::size_t i) { return std::string(name) + "[" + std::to_string(i) + "]"; }

template <Scalar S>
void check_vectors(ConstraintList<S>& c, const ProgramPoint<S>& pt) {
  const S& d = pt.d();
  const S& x = pt[Var::x];
  const S& e0 = pt[Var::e0];
  const auto& outer = pt.outer();
  if (pt.vertex_count() == 0) return c.fail("n >= 1");
  const S n = from_int<S>(static_cast<std::int64_t>(pt.vertex_count()));
  if (outer.size() > kMaxVectorTerms) return c.fail("R0 <= 16");
  c.at_most(from_int<S>(static_cast<std::int64_t>(outer.size())), e0 * n, "R0 <= e0 * n");
  for (std::size_t i = 0; i < outer.size() && !c.failed(); ++i) {
    const OuterTerm<S>& t = outer[i];
    c.at_least(t.y, S(1) - d, indexed("y", i) + " >= 1 - d");
    c.at_most(t.y, S(1), indexed("y", i) + " <= 1");
    c.at_least(t.e, x + t.y - S(1), indexed("e", i) + " >= x + y - 1");
    c.at_most(t.e, S(1), indexed("e", i) + " <= 1");
    c.at_least(t.q0, t.e + e0 - x, indexed("q0", i) + " >= e + e0 - x");
    c.at_most(t.q0, S(1), indexed("q0", i) + " <= 1");
    if (pt.level() == 1) {
      if (t.inner.size() > kMaxVectorTerms) return c.fail(indexed("R", i) + " <= 16");
      c.at_most(from_int<S>(static_cast<std::int64_t>(t.inner.size())), t.q0 * n, indexed("R", i) + " <= q0 * n");
    } else {
      if (t.inner.size() != 1) return c.fail(indexed("inner", i) + " has one term");
      c.at_least(t.r, S(0), indexed("r", i) + " >= 0");
      c.at_most(t.r, t.q0, indexed("r", i) + " <= q0");
    }
    for (std::size_t j = 0; j < t.inner.size() && !c.failed(); ++j) {
      const InnerTerm<S>& u = t.inner[j];
      const std::string tag = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      c.at_least(u.f, t.y - d, "f" + tag + " >= y - d");
      c.at_most(u.f, t.y, "f" + tag + " <= y");
      c.at_least(u.q, t.e + u.f - t.y, "q" + tag + " >= e + f - y");
      c.at_most(u.q, S(1), "q" + tag + " <= 1");
      c.at_least(u.p, t.q0 + u.f - t.y, "p" + tag + " >= q0 + f - y");
      c.at_most(u.p, S(1), "p" + tag + " <= 1");
    }
  }
}

}  // namespace detail

// Checks every interval constraint of the level's table, in table order, and names
// the first one violated. Floating points get an absolute slack of 1e-12.
template <Scalar S>
DomainCheck check_domain(const ProgramPoint<S>& pt) {
  using enum Var;
  detail::ConstraintList<S> c;
  detail::check_d(c, pt.d());
  if (c.failed()) return c.result();
  if (!pt.well_formed()) {
    c.fail("variables of level " + std::to_string(pt.level()));
    return c.result();
  }
  const S& d = pt.d();
  const S one(1);
  const S zero(0);
  const int level = pt.level();

  if (level <= 8) {
    c.at_least(pt[x], one - d, "x >= 1 - d");
    c.at_most(pt[x], one, "x <= 1");
  }
  if (level >= 3 && level <= 7) {
    c.at_least(pt[y], one - d, "y >= 1 - d");
    c.at_most(pt[y], one, "y <= 1");
  }
  if (level <= 6) {
    c.at_least(pt[e0], pt[x] - d, "e0 >= x - d");
    c.at_most(pt[e0], pt[x], "e0 <= x");
  }
  if (level <= 2) {
    detail::check_vectors(c, pt);
    return c.result();
  }
  if (level <= 6) {
    c.at_least(pt[e], pt[x] + pt[y] - one, "e >= x + y - 1");
    c.at_most(pt[e], one, "e <= 1");
    c.at_least(pt[f], pt[y] - d, "f >= y - d");
    c.at_most(pt[f], pt[y], "f <= y");
  }
  if (level <= 5) {
    c.at_least(pt[q0], pt[e] + pt[e0] - pt[x], "q0 >= e + e0 - x");
    c.at_most(pt[q0], one, "q0 <= 1");
  }
  if (level <= 4) {
    c.at_least(pt[q], pt[e] + pt[f] - pt[y], "q >= e + f - y");
    c.at_most(pt[q], one, "q <= 1");
    c.at_least(pt[p], pt[q0] + pt[f] - pt[y], "p >= q0 + f - y");
    c.at_most(pt[p], one, "p <= 1");
    c.at_least(pt[r0], zero, "r0 >= 0");
    c.at_most(pt[r0], pt[e0], "r0 <= e0");
    c.at_least(pt[r], zero, "r >= 0");
    c.at_most(pt[r], pt[q0], "r <= q0");
  }
  if (level >= 7 && level <= 9) {
    c.at_least(pt[a], zero, "a >= 0");
    c.at_most(pt[a], d, "a <= d");
  }
  if (level >= 7) {
    c.at_least(pt[b], zero, "b >= 0");
    c.at_most(pt[b], d, "b <= d");
  }
  return c.result();
}

}  // namespace tridecomp::program
