#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tridecomp/graph.hpp"

namespace tridecomp {

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;  // a < b < c

  static Triangle of(Vertex x, Vertex y, Vertex z) {
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
  }
  std::array<Vertex, 3> vertices() const { return {a, b, c}; }
  bool contains(Vertex v) const { return v == a || v == b || v == c; }
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

struct OrderedTriangle {
  Vertex x1 = 0;
  Vertex x2 = 0;
  Vertex x3 = 0;

  std::array<Vertex, 3> vertices() const { return {x1, x2, x3}; }
  Triangle unordered() const { return Triangle::of(x1, x2, x3); }
  friend auto operator<=>(const OrderedTriangle&, const OrderedTriangle&) = default;
};

// The six orderings of t in a fixed permutation order.
inline std::array<OrderedTriangle, 6> orderings(const Triangle& t) {
  return {{{t.a, t.b, t.c}, {t.a, t.c, t.b}, {t.b, t.a, t.c}, {t.b, t.c, t.a}, {t.c, t.a, t.b}, {t.c, t.b, t.a}}};
}

using OrderedFiveClique = std::array<Vertex, 5>;

// Visits every triangle once, lexicographically.
template <class F>
void for_each_triangle(const Graph& g, F&& f) {
  const std::size_t words = g.words_per_row();
  std::vector<Word> ab(words);
  for (Vertex a = 0; a < g.order(); ++a) {
    VertexSet::for_each_bit(g.row(a), [&](Vertex b) {
      if (b <= a) return;
      const auto ra = g.row(a);
      const auto rb = g.row(b);
      for (std::size_t w = 0; w < words; ++w) ab[w] = ra[w] & rb[w];
      VertexSet::for_each_bit(ab, [&](Vertex c) {
        if (c > b) f(Triangle{a, b, c});
      });
    });
  }
}

inline std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for_each_triangle(g, [&](const Triangle& t) { out.push_back(t); });
  return out;
}

// Number of cliques on |s|+1 vertices containing the clique s, i.e. |∩_{v∈s} N(v)|.
inline std::size_t extension_count(const Graph& g, std::span<const Vertex> s) {
  if (!g.is_clique(s)) throw NotACliqueError(std::vector<Vertex>(s.begin(), s.end()));
  return common_count(g, s);
}

inline std::size_t extension_count(const Graph& g, std::initializer_list<Vertex> s) {
  return extension_count(g, std::span<const Vertex>(s.begin(), s.size()));
}

inline std::size_t extension_count(const Graph& g, const VertexSet& s) {
  const auto vs = s.to_vector();
  return extension_count(g, std::span<const Vertex>(vs));
}

// Every ordered 5-clique having (x1, x2, x3) as a subsequence, each exactly once, in
// lexicographic order.
inline std::vector<OrderedFiveClique> ordered_five_cliques_containing(const Graph& g, const OrderedTriangle& o) {
  const auto xs = o.vertices();
  if (!g.is_clique(xs)) throw NotACliqueError({xs.begin(), xs.end()});
  const std::vector<Vertex> rest = common_neighbors(g, VertexSet::of(g.order(), {o.x1, o.x2, o.x3})).to_vector();
  std::vector<OrderedFiveClique> out;
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      if (!g.adjacent(rest[i], rest[j])) continue;
      for (const auto& extras : {std::array<Vertex, 2>{rest[i], rest[j]}, std::array<Vertex, 2>{rest[j], rest[i]}}) {
        // Choose the two slots taken by the extras; the triangle fills the others in order.
        for (int s0 = 0; s0 < 5; ++s0) {
          for (int s1 = s0 + 1; s1 < 5; ++s1) {
            OrderedFiveClique k{};
            std::size_t xi = 0;
            for (int pos = 0; pos < 5; ++pos) {
              if (pos == s0) k[pos] = extras[0];
              else if (pos == s1) k[pos] = extras[1];
              else k[pos] = xs[xi++];
            }
            out.push_back(k);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tridecomp
