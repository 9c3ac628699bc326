#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tridecomp/cliques.hpp"
#include "tridecomp/gadget.hpp"
#include "tridecomp/scalar.hpp"

namespace tridecomp {

// Product of the prefix extension counts |K_{i+1}(G, {v_1..v_i})|, i = 2..r.
inline std::int64_t delegation_denominator(const Graph& g, std::span<const Vertex> tuple) {
  if (tuple.size() < 2 || tuple.size() > 4) throw std::invalid_argument("ordered clique must have 2..4 vertices");
  if (!g.is_clique(tuple)) throw NotACliqueError({tuple.begin(), tuple.end()});
  std::int64_t denom = 1;
  for (std::size_t i = 2; i <= tuple.size(); ++i) {
    const std::size_t count = common_count(g, tuple.first(i));
    if (count == 0) throw DelegationUndefined({tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(i)});
    denom *= static_cast<std::int64_t>(count);
  }
  return denom;
}

// W(v_1, ..., v_r): the share of v_1v_2's unit demand that reaches the ordered clique
// when it is split uniformly over triangles, then K4s, then K5s.
template <Scalar S>
S weight_W(const Graph& g, std::span<const Vertex> tuple) {
  return ratio<S>(1, delegation_denominator(g, tuple));
}

template <Scalar S>
S weight_W(const Graph& g, std::initializer_list<Vertex> tuple) {
  return weight_W<S>(g, std::span<const Vertex>(tuple.begin(), tuple.size()));
}

// Visits every 5-clique {a<b<c<d<e} once.
template <class F>
void for_each_five_clique(const Graph& g, F&& f) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const VertexSet na = g.neighbors(a);
    na.for_each([&](Vertex b) {
      if (b <= a) return;
      const VertexSet nab = na & g.neighbors(b);
      nab.for_each([&](Vertex c) {
        if (c <= b) return;
        const VertexSet nabc = nab & g.neighbors(c);
        nabc.for_each([&](Vertex d) {
          if (d <= c) return;
          const VertexSet nabcd = nabc & g.neighbors(d);
          nabcd.for_each([&](Vertex e) {
            if (e > d) f(OrderedFiveClique{a, b, c, d, e});
          });
        });
      });
    });
  }
}

// Visits every ordered 5-clique (all 120 orderings of each 5-clique).
template <class F>
void for_each_ordered_five_clique(const Graph& g, F&& f) {
  for_each_five_clique(g, [&](OrderedFiveClique k) {
    do {
      f(static_cast<const OrderedFiveClique&>(k));
    } while (std::next_permutation(k.begin(), k.end()));
  });
}

// Brute-force definition: w_G(T) = 1/2 * sum over ordered 5-cliques K of
// W(v1..v4) * psi_K(T). Slow; meant for small graphs and cross-checks.
template <Scalar S>
S w_oracle(const Graph& g, const Triangle& t) {
  if (!g.is_clique(t.vertices())) throw NotACliqueError({t.a, t.b, t.c});
  S sum(0);
  for_each_ordered_five_clique(g, [&](const OrderedFiveClique& k) {
    const GadgetValue psi_value = psi_unchecked(k, t);
    if (psi_value == GadgetValue::zero) return;
    sum += weight_W<S>(g, std::span<const Vertex>(k.data(), 4)) * gadget_scalar<S>(psi_value);
  });
  return sum * ratio<S>(1, 2);
}

// The same brute-force half-sum for every triangle at once, lexicographically.
template <Scalar S>
std::vector<std::pair<Triangle, S>> oracle_weights(const Graph& g) {
  std::vector<std::pair<Triangle, S>> out;
  std::map<Triangle, std::size_t> index;
  for_each_triangle(g, [&](const Triangle& t) {
    index.emplace(t, out.size());
    out.emplace_back(t, S(0));
  });
  for_each_ordered_five_clique(g, [&](const OrderedFiveClique& k) {
    const S w = weight_W<S>(g, std::span<const Vertex>(k.data(), 4)) * ratio<S>(1, 2);
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        for (int l = j + 1; l < 5; ++l) {
          const Triangle t = Triangle::of(k[i], k[j], k[l]);
          out[index.at(t)].second += w * gadget_scalar<S>(psi_unchecked(k, t));
        }
  });
  return out;
}

// w_G(O) through the cancellation identity:
//   1/6 * ( W(x1,x2) - sum_{y in R} ( W(x1,y,x2) - W(x1,x2,y)
//           + sum_{z in N(y) ∩ R} ( W(x1,y,x2,z) - W(x1,x2,y,z) + W(x1,y,z,x2) - W(z,y,x1,x2) ) ) )
// with R the common neighborhood of the triangle. Evaluated term by term.
template <Scalar S>
S w_fast_ordered(const Graph& g, const OrderedTriangle& o) {
  const auto xs = o.vertices();
  if (!g.is_clique(xs)) throw NotACliqueError({xs.begin(), xs.end()});
  const Vertex x1 = o.x1;
  const Vertex x2 = o.x2;
  const VertexSet common = common_neighbors(g, VertexSet::of(g.order(), {o.x1, o.x2, o.x3}));
  S outer(0);
  common.for_each([&](Vertex y) {
    S term = weight_W<S>(g, {x1, y, x2}) - weight_W<S>(g, {x1, x2, y});
    (common & g.neighbors(y)).for_each([&](Vertex z) {
      term += weight_W<S>(g, {x1, y, x2, z});
      term -= weight_W<S>(g, {x1, x2, y, z});
      term += weight_W<S>(g, {x1, y, z, x2});
      term -= weight_W<S>(g, {z, y, x1, x2});
    });
    outer += term;
  });
  S result = weight_W<S>(g, {x1, x2}) - outer;
  return result * ratio<S>(1, 6);
}

// 1 - 6 |K3(G, {x1,x2})| w_G(O); the weight is non-negative iff this is at most 1.
template <Scalar S>
S w1_hat(const Graph& g, const OrderedTriangle& o) {
  const S scale = from_int<S>(6 * static_cast<std::int64_t>(extension_count(g, {o.x1, o.x2})));
  return S(1) - scale * w_fast_ordered<S>(g, o);
}

// Same quantity written with common-neighbor densities and the scaled weights
// What(v1..vr) = prod_{i=2..r} 1 / Nhat(v1..vi).
template <Scalar S>
S w1_hat_density(const Graph& g, const OrderedTriangle& o) {
  const auto xs = o.vertices();
  if (!g.is_clique(xs)) throw NotACliqueError({xs.begin(), xs.end()});
  const auto scaled = [&](std::initializer_list<Vertex> tuple) {
    const std::vector<Vertex> vs(tuple);
    S w(1);
    for (std::size_t i = 2; i <= vs.size(); ++i) {
      const Density dens = nhat(g, VertexSet::of(g.order(), std::span<const Vertex>(vs.data(), i)));
      if (dens.count == 0) throw DelegationUndefined({vs.begin(), vs.begin() + static_cast<std::ptrdiff_t>(i)});
      w = w / dens.value<S>();
    }
    return w;
  };
  const S inv_n = ratio<S>(1, static_cast<std::int64_t>(g.order()));
  const Vertex x1 = o.x1;
  const Vertex x2 = o.x2;
  const VertexSet common = common_neighbors(g, VertexSet::of(g.order(), {o.x1, o.x2, o.x3}));
  S outer(0);
  common.for_each([&](Vertex y) {
    S inner(0);
    (common & g.neighbors(y)).for_each([&](Vertex z) {
      inner += scaled({x1, y, x2, z}) - scaled({x1, x2, y, z}) + scaled({x1, y, z, x2}) - scaled({z, y, x1, x2});
    });
    outer += scaled({x1, y, x2}) - scaled({x1, x2, y}) + inv_n * inner;
  });
  return nhat(g, {x1, x2}).template value<S>() * inv_n * outer;
}

}  // namespace tridecomp
