#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "tridecomp/graph.hpp"
#include "tridecomp/random.hpp"

namespace tridecomp {

inline constexpr std::size_t kMaxGeneratedOrder = std::size_t{1} << 20;

inline Graph gen_complete(std::size_t n) {
  GraphBuilder b(n);  // throws EmptyGraphError for n == 0
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

// Circulant graph on n vertices with connection set {±1, ..., ±reach}.
inline Graph gen_circulant(std::size_t n, std::size_t reach) {
  if (2 * reach >= n) throw std::invalid_argument("circulant reach too large for its order");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v)
    for (std::size_t s = 1; s <= reach; ++s) b.add_edge(v, static_cast<Vertex>((v + s) % n));
  return b.build();
}

// Relabels vertices by a seeded Fisher-Yates permutation. seed 0 keeps labels.
inline Graph relabel(const Graph& g, std::uint64_t seed) {
  if (seed == 0) return g;
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  Rng rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

// Complete join of two (6k+2)-regular circulants on 12k+6 vertices each:
// n = 24k+12 and delta = 18k+8 = 3n/4 - 1. Vertices 0..12k+5 form the first side.
inline Graph gen_join_regular(std::size_t k, std::uint64_t seed = 0) {
  if (k < 1) throw std::invalid_argument("join construction needs k >= 1");
  if (k > (kMaxGeneratedOrder - 12) / 24) throw std::overflow_error("join construction order too large");
  const std::size_t side = 12 * k + 6;
  const Graph h = gen_circulant(side, 3 * k + 1);
  GraphBuilder b(2 * side);
  for (const Edge& e : h.edges()) {
    b.add_edge(e.u, e.v);
    b.add_edge(static_cast<Vertex>(e.u + side), static_cast<Vertex>(e.v + side));
  }
  for (Vertex u = 0; u < side; ++u)
    for (Vertex v = 0; v < side; ++v) b.add_edge(u, static_cast<Vertex>(v + side));
  return relabel(b.build(), seed);
}

enum class BlowupMode { clique, independent };

// Each base vertex i becomes the part {i*t, ..., i*t + t-1}.
inline Graph gen_blowup(const Graph& base, std::size_t part_size, BlowupMode mode) {
  if (part_size < 1) throw std::invalid_argument("part size must be at least 1");
  if (base.order() > kMaxGeneratedOrder / part_size) throw std::overflow_error("blow-up order too large");
  const std::size_t t = part_size;
  GraphBuilder b(base.order() * t);
  for (Vertex i = 0; i < base.order(); ++i) {
    if (mode == BlowupMode::clique) {
      for (std::size_t x = 0; x < t; ++x)
        for (std::size_t y = x + 1; y < t; ++y)
          b.add_edge(static_cast<Vertex>(i * t + x), static_cast<Vertex>(i * t + y));
    }
  }
  for (const Edge& e : base.edges()) {
    for (std::size_t x = 0; x < t; ++x)
      for (std::size_t y = 0; y < t; ++y)
        b.add_edge(static_cast<Vertex>(e.u * t + x), static_cast<Vertex>(e.v * t + y));
  }
  return b.build();
}

inline constexpr std::size_t kGnpMaxAttempts = 1000;

// G(n, p) conditioned on min degree >= delta_min by rejection. Pairs are drawn in
// lexicographic order from one mt19937_64 stream, so the result depends only on
// the arguments.
inline Graph gen_gnp_min_degree(std::size_t n, double p, std::size_t delta_min, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  if (n == 0) throw EmptyGraphError();
  if (delta_min > n - 1) throw std::invalid_argument("minimum degree exceeds n - 1");
  if (n > kMaxGeneratedOrder) throw std::overflow_error("order too large");
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < kGnpMaxAttempts; ++attempt) {
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (uniform01(rng) < p) b.add_edge(u, v);
    Graph g = b.build();
    if (g.min_degree() >= delta_min) return g;
  }
  throw GenerationTimeout(kGnpMaxAttempts);
}

}  // namespace tridecomp
