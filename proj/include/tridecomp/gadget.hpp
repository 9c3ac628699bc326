#pragma once

#include <array>
#include <cstdint>

#include "tridecomp/cliques.hpp"
#include "tridecomp/scalar.hpp"

namespace tridecomp {

// Value of the edge-gadget psi_{K, v1v2} on a triangle T.
enum class GadgetValue : std::int8_t { zero, plus_third, minus_sixth };

template <Scalar S>
S gadget_scalar(GadgetValue v) {
  switch (v) {
    case GadgetValue::plus_third: return ratio<S>(1, 3);
    case GadgetValue::minus_sixth: return ratio<S>(-1, 6);
    case GadgetValue::zero: break;
  }
  return S(0);
}

// Assumes k is a 5-clique; T outside V(K) gets zero, otherwise the sign depends
// only on |T ∩ {v1, v2}|.
inline GadgetValue psi_unchecked(const OrderedFiveClique& k, const Triangle& t) {
  for (Vertex v : t.vertices()) {
    if (v != k[0] && v != k[1] && v != k[2] && v != k[3] && v != k[4]) return GadgetValue::zero;
  }
  const int hits = static_cast<int>(t.contains(k[0])) + static_cast<int>(t.contains(k[1]));
  return hits == 1 ? GadgetValue::minus_sixth : GadgetValue::plus_third;
}

inline GadgetValue psi(const Graph& g, const OrderedFiveClique& k, const Triangle& t) {
  if (!g.is_clique(k)) throw NotACliqueError({k.begin(), k.end()});
  return psi_unchecked(k, t);
}

// Sum of psi_K over the triangles of g through f: 1 when f = v1v2, else 0.
template <Scalar S>
S gadget_edge_sum(const Graph& g, const OrderedFiveClique& k, const Edge& f) {
  if (!g.is_clique(k)) throw NotACliqueError({k.begin(), k.end()});
  S sum(0);
  if (!g.adjacent(f.u, f.v)) return sum;
  const std::array<Vertex, 2> ends{f.u, f.v};
  common_neighbors(g, VertexSet::of(g.order(), ends)).for_each([&](Vertex w) {
    sum += gadget_scalar<S>(psi_unchecked(k, Triangle::of(f.u, f.v, w)));
  });
  return sum;
}

}  // namespace tridecomp
