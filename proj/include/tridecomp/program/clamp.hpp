#pragma once

#include <cstdint>

#include "tridecomp/errors.hpp"
#include "tridecomp/program/domain.hpp"
#include "tridecomp/program/objective.hpp"

namespace tridecomp::program {

namespace detail {

template <Scalar S>
S inner_value(const OuterTerm<S>& t, const InnerTerm<S>& u, const S& e0) {
  const S one(1);
  const S cancel0 = one / t.q0 * (one / t.e - one / e0);
  return one / u.p * (one / u.q * (one / t.e - one / u.f) + cancel0);
}

template <Scalar S>
S outer_value(const OuterTerm<S>& t, const S& e0) {
  const S one(1);
  const S cancel0 = one / t.q0 * (one / t.e - one / e0);
  return cancel0 + t.r * inner_value(t, t.inner.front(), e0);
}

}  // namespace detail

// Applies the level's substitution without leaving the level:
//   1: every f, q, p of outer index i copied from the inner index maximizing its term
//   2: every outer block copied from the index maximizing its term
//   4: r = q0, r0 = e0, p = q0 + f - y, q = e + f - y
//   5: q0 = e + e0 - x      6: e = x + y - 1      7: y = 1 - d
//   8: x = 1 - d            9: a = 0              10: b = 0
// Level 3 has no substitution (its step only swaps in the ramped objective).
template <Scalar S>
ProgramPoint<S> clamp_substitute(const ProgramPoint<S>& pt) {
  using enum Var;
  if (const DomainCheck c = check_domain(pt); !c) throw DomainError(c.violated);
  ProgramPoint<S> out = pt;
  const S& d = pt.d();
  const S one(1);
  switch (pt.level()) {
    case 1:
      for (OuterTerm<S>& t : out.outer()) {
        if (t.inner.empty()) continue;
        std::size_t best = 0;
        S best_value = detail::inner_value(t, t.inner[0], pt[e0]);
        for (std::size_t j = 1; j < t.inner.size(); ++j) {
          S v = detail::inner_value(t, t.inner[j], pt[e0]);
          if (v > best_value) {
            best_value = std::move(v);
            best = j;
          }
        }
        const InnerTerm<S> chosen = t.inner[best];
        for (InnerTerm<S>& u : t.inner) u = chosen;
      }
      break;
    case 2:
      if (!out.outer().empty()) {
        std::size_t best = 0;
        S best_value = detail::outer_value(out.outer()[0], pt[e0]);
        for (std::size_t i = 1; i < out.outer().size(); ++i) {
          S v = detail::outer_value(out.outer()[i], pt[e0]);
          if (v > best_value) {
            best_value = std::move(v);
            best = i;
          }
        }
        const OuterTerm<S> chosen = out.outer()[best];
        for (OuterTerm<S>& t : out.outer()) t = chosen;
      }
      break;
    case 3: break;
    case 4:
      out.set(r, pt[q0]);
      out.set(r0, pt[e0]);
      out.set(p, pt[q0] + pt[f] - pt[y]);
      out.set(q, pt[e] + pt[f] - pt[y]);
      break;
    case 5: out.set(q0, pt[e] + pt[e0] - pt[x]); break;
    case 6: out.set(e, pt[x] + pt[y] - one); break;
    case 7: out.set(y, one - d); break;
    case 8: out.set(x, one - d); break;
    case 9: out.set(a, S(0)); break;
    case 10: out.set(b, S(0)); break;
    default: throw std::invalid_argument("bad level");
  }
  return out;
}

// Substitutes, then re-expresses the point in the next level's variables. Level 10
// maps to itself with b = 0. Levels 1 -> 2 -> 3 turn the counts into r_i = R_i / n and
// r0 = R0 / n; an empty index set falls back to the feasible corner whose objective
// contribution is zero.
template <Scalar S>
ProgramPoint<S> clamp_step(const ProgramPoint<S>& pt) {
  using enum Var;
  const ProgramPoint<S> sub = clamp_substitute(pt);
  const S& d = pt.d();
  const S one(1);
  const int level = pt.level();
  if (level == 10) return sub;
  ProgramPoint<S> next(level + 1, d);
  const auto keep = [&](std::initializer_list<Var> vars) {
    for (Var v : vars) next.set(v, sub[v]);
  };
  const auto n = static_cast<std::int64_t>(pt.vertex_count());
  switch (level) {
    case 1: {
      keep({x, e0});
      next.set_vertex_count(pt.vertex_count());
      for (const OuterTerm<S>& t : sub.outer()) {
        OuterTerm<S> u = t;
        if (t.inner.empty()) {
          u.inner = {InnerTerm<S>{t.y, t.e, t.q0}};
          u.r = S(0);
        } else {
          u.inner.resize(1);
          u.r = ratio<S>(static_cast<std::int64_t>(t.inner.size()), n);
        }
        next.outer().push_back(std::move(u));
      }
      break;
    }
    case 2: {
      keep({x, e0});
      if (sub.outer().empty()) {
        next.set(y, one).set(e, sub[x]).set(f, one).set(q0, sub[e0]).set(q, sub[x]).set(p, sub[e0]);
        next.set(r0, S(0)).set(r, S(0));
      } else {
        const OuterTerm<S>& t = sub.outer().front();
        next.set(y, t.y).set(e, t.e).set(f, t.inner[0].f).set(q0, t.q0).set(q, t.inner[0].q).set(p, t.inner[0].p);
        next.set(r0, ratio<S>(static_cast<std::int64_t>(sub.outer().size()), n)).set(r, t.r);
      }
      break;
    }
    case 3: keep({x, y, e0, e, f, q0, q, p, r0, r}); break;
    case 4: keep({x, y, e0, e, f, q0}); break;
    case 5: keep({x, y, e0, e, f}); break;
    case 6:
      keep({x, y});
      next.set(a, sub[x] - sub[e0]);
      next.set(b, sub[y] - sub[f]);
      break;
    case 7: keep({x, a, b}); break;
    case 8: keep({a, b}); break;
    case 9: keep({b}); break;
    default: throw std::invalid_argument("bad level");
  }
  return next;
}

}  // namespace tridecomp::program
