#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "tridecomp/cliques.hpp"
#include "tridecomp/decompose.hpp"
#include "tridecomp/program/domain.hpp"
#include "tridecomp/program/objective.hpp"
#include "tridecomp/program/point.hpp"

namespace tridecomp {

// The level-3 program point seen from (O, y, z): densities of the common
// neighborhoods of x1, y, {x1,x2}, {x1,y}, {y,z}, {x1,x2,y}, {x1,y,z}, {x1,x2,y,z},
// with r0 = |R|/n and r = |N(y) ∩ R|/n.
template <Scalar S>
program::ProgramPoint<S> extract_program_point(const Graph& g, const OrderedTriangle& o, Vertex y, Vertex z,
                                               const S& d) {
  using V = program::Var;
  const auto xs = o.vertices();
  if (!g.is_clique(xs)) throw NotACliqueError({xs.begin(), xs.end()});
  const VertexSet common = common_neighbors(g, VertexSet::of(g.order(), {o.x1, o.x2, o.x3}));
  if (y >= g.order() || !common.contains(y)) throw std::invalid_argument("y must be a common neighbor of the triangle");
  const VertexSet common_y = common & g.neighbors(y);
  if (z >= g.order() || !common_y.contains(z)) throw std::invalid_argument("z must lie in N(y) and R");
  const auto density = [&](std::initializer_list<Vertex> vs) { return nhat(g, vs).template value<S>(); };
  const auto n = static_cast<std::int64_t>(g.order());
  program::ProgramPoint<S> pt(3, d);
  pt.set(V::x, density({o.x1}));
  pt.set(V::y, density({y}));
  pt.set(V::e0, density({o.x1, o.x2}));
  pt.set(V::e, density({o.x1, y}));
  pt.set(V::f, density({y, z}));
  pt.set(V::q0, density({o.x1, o.x2, y}));
  pt.set(V::q, density({o.x1, y, z}));
  pt.set(V::p, density({o.x1, o.x2, y, z}));
  pt.set(V::r0, ratio<S>(static_cast<std::int64_t>(common.count()), n));
  pt.set(V::r, ratio<S>(static_cast<std::int64_t>(common_y.count()), n));
  return pt;
}

// Same, with d = 1 - delta(G)/n.
template <Scalar S>
program::ProgramPoint<S> extract_program_point(const Graph& g, const OrderedTriangle& o, Vertex y, Vertex z) {
  const auto n = static_cast<std::int64_t>(g.order());
  return extract_program_point<S>(g, o, y, z, ratio<S>(n - static_cast<std::int64_t>(g.min_degree()), n));
}

// Kernel hook checking the level-3 constraint table on every (O, y, z) in exact
// integer arithmetic: each density is a count over n and d = num/den.
class BridgeAudit {
 public:
  static constexpr bool enabled = true;

  BridgeAudit() = default;
  BridgeAudit(std::size_t n, std::int64_t d_num, std::int64_t d_den) : n_(static_cast<std::int64_t>(n)), num_(d_num), den_(d_den) {
    if (d_den <= 0) throw std::invalid_argument("d denominator must be positive");
  }

  void operator()(const KernelSample& s) {
    ++points_;
    const std::int64_t x = c(s.deg_x1), y = c(s.deg_y), e0 = c(s.edge_x1x2), e = c(s.edge_x1y), f = c(s.edge_yz);
    const std::int64_t q0 = c(s.k4_x1x2y), q = c(s.k4_x1yz), p = c(s.k5_x1x2yz), r0 = c(s.common),
                       r = c(s.common_y);
    // den * v >= den * w - num * n  encodes  v/n >= w/n - d.
    const std::int64_t dn = num_ * n_;
    const char* bad = nullptr;
    if (den_ * x < den_ * n_ - dn) bad = "x >= 1 - d";
    else if (x > n_) bad = "x <= 1";
    else if (den_ * y < den_ * n_ - dn) bad = "y >= 1 - d";
    else if (y > n_) bad = "y <= 1";
    else if (den_ * e0 < den_ * x - dn) bad = "e0 >= x - d";
    else if (e0 > x) bad = "e0 <= x";
    else if (e < x + y - n_) bad = "e >= x + y - 1";
    else if (e > n_) bad = "e <= 1";
    else if (den_ * f < den_ * y - dn) bad = "f >= y - d";
    else if (f > y) bad = "f <= y";
    else if (q0 < e + e0 - x) bad = "q0 >= e + e0 - x";
    else if (q0 > n_) bad = "q0 <= 1";
    else if (q < e + f - y) bad = "q >= e + f - y";
    else if (q > n_) bad = "q <= 1";
    else if (p < q0 + f - y) bad = "p >= q0 + f - y";
    else if (p > n_) bad = "p <= 1";
    else if (r0 > e0) bad = "r0 <= e0";
    else if (r > q0) bad = "r <= q0";
    if (bad) {
      ++violations_;
      if (!first_) first_ = Violation{s, bad};
    }
  }

  void merge(const BridgeAudit& other) {
    points_ += other.points_;
    violations_ += other.violations_;
    if (!first_ && other.first_) first_ = other.first_;
  }

  struct Violation {
    KernelSample sample;
    std::string constraint;
  };

  std::size_t points() const noexcept { return points_; }
  std::size_t violations() const noexcept { return violations_; }
  const std::optional<Violation>& first_violation() const noexcept { return first_; }

 private:
  static std::int64_t c(std::size_t v) { return static_cast<std::int64_t>(v); }

  std::int64_t n_ = 1;
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::size_t points_ = 0;
  std::size_t violations_ = 0;
  std::optional<Violation> first_;
};

// 1 - 6 |N(x1,x2)| w_G(O) for every ordering in a report, with the largest value.
struct W1Summary {
  double max_value = -1e300;
  std::optional<OrderedTriangle> argmax;
  std::size_t above_one = 0;  // beyond the tolerance
  std::size_t orderings = 0;
};

template <Scalar S>
W1Summary summarize_w1(const Graph& g, const TriangleWeightReport<S>& report, double tol = 1e-12) {
  W1Summary out;
  for (std::size_t idx = 0; idx < report.triangles.size(); ++idx) {
    const auto ords = orderings(report.triangles[idx]);
    for (int k = 0; k < 6; ++k) {
      const auto c = static_cast<std::int64_t>(common_count(g, {ords[k].x1, ords[k].x2}));
      const S w1 = S(1) - from_int<S>(6 * c) * report.ordered_weights[idx][k];
      const double v = to_double(w1);
      ++out.orderings;
      if (is_exact_v<S> ? w1 > S(1) : v > 1.0 + tol) ++out.above_one;
      if (!out.argmax || v > out.max_value) {
        out.max_value = v;
        out.argmax = ords[k];
      }
    }
  }
  return out;
}

}  // namespace tridecomp
