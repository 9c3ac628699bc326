#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "tridecomp/cliques.hpp"
#include "tridecomp/parallel.hpp"
#include "tridecomp/scalar.hpp"

namespace tridecomp {

// Maps each edge u<v to its position in Graph::edges() using per-row offsets and a
// masked popcount for the rank of v among u's larger neighbors.
class EdgeIndex {
 public:
  explicit EdgeIndex(const Graph& g) : g_(&g), offsets_(g.order() + 1, 0) {
    for (Vertex u = 0; u < g.order(); ++u) offsets_[u + 1] = offsets_[u] + upper_rank(u, static_cast<Vertex>(g.order()));
  }

  std::size_t size() const noexcept { return offsets_.back(); }
  std::size_t operator()(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return offsets_[u] + upper_rank(u, v);
  }

 private:
  // Neighbors w of u with u < w < limit.
  std::size_t upper_rank(Vertex u, Vertex limit) const {
    const auto row = g_->row(u);
    std::size_t count = 0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      const std::size_t base = w * kWordBits;
      Word bits = row[w];
      if (base + kWordBits <= u + std::size_t{1}) continue;
      if (base <= u) bits &= ~Word{0} << (u - base) << 1;
      if (base >= limit) break;
      if (limit < base + kWordBits) bits &= (Word{1} << (limit - base)) - 1;
      count += static_cast<std::size_t>(std::popcount(bits));
    }
    return count;
  }

  const Graph* g_;
  std::vector<std::size_t> offsets_;
};

// Counts seen for one ordered triangle O = (x1, x2, x3), one y in R = N(x1)∩N(x2)∩N(x3)
// and one z in N(y)∩R. All are sizes of common neighborhoods.
struct KernelSample {
  OrderedTriangle o;
  Vertex y = 0;
  Vertex z = 0;
  std::size_t deg_x1 = 0;      // |N(x1)|
  std::size_t deg_y = 0;       // |N(y)|
  std::size_t edge_x1x2 = 0;   // |N(x1,x2)|
  std::size_t edge_x1y = 0;    // |N(x1,y)|
  std::size_t edge_yz = 0;     // |N(y,z)|
  std::size_t k4_x1x2y = 0;    // |N(x1,x2,y)|
  std::size_t k4_x1yz = 0;     // |N(x1,y,z)|
  std::size_t k5_x1x2yz = 0;   // |N(x1,x2,y,z)|
  std::size_t common = 0;      // |R|
  std::size_t common_y = 0;    // |N(y) ∩ R|
};

struct NoKernelHook {
  static constexpr bool enabled = false;
  void operator()(const KernelSample&) {}
};

template <Scalar S>
struct TriangleWeightReport {
  std::size_t n = 0;
  std::size_t min_degree = 0;
  NumericMode mode = NumericMode::floating;
  std::vector<Triangle> triangles;               // lexicographic
  std::vector<S> weights;                        // w_G(T), aligned with triangles
  std::vector<std::array<S, 6>> ordered_weights; // w_G(O) in orderings() order
  std::vector<Edge> edges;                       // every edge of G, lexicographic
  std::vector<S> edge_sums;                      // aligned with edges
  std::vector<std::size_t> edge_triangles;       // triangles through each edge
  std::vector<Edge> uncovered_edges;             // edges in no triangle
  std::optional<S> min_weight;
  std::optional<Triangle> min_witness;
  // b = (|N(y)| - |N(y,z)|) / n over every (T, y, z) visited by the kernel.
  std::size_t b_samples = 0;
  double b_mean = 0.0;
  double b_min = 0.0;

  std::size_t negative_count() const {
    return static_cast<std::size_t>(std::count_if(weights.begin(), weights.end(), [](const S& w) { return w < S(0); }));
  }
};

namespace detail {

inline constexpr std::array<std::array<int, 2>, 6> kOrderPairs{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};

constexpr int pair_slot(int i, int j) { return i + j - 1; }  // {0,1}->0, {0,2}->1, {1,2}->2

struct KernelFailure {
  std::vector<Vertex> prefix;
};

// Exact sums use the common denominator L^k, L = lcm(1..n), so every term is an
// integer multiple and no gcd is taken inside the loops.
struct ExactTables {
  mpz_class lcm{1};
  std::vector<mpz_class> cofactor;  // lcm / k

  explicit ExactTables(std::size_t n) : cofactor(n + 1) {
    for (std::size_t k = 1; k <= n; ++k) mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), k);
    for (std::size_t k = 1; k <= n; ++k) cofactor[k] = lcm / static_cast<unsigned long>(k);
  }
};

template <Scalar S>
struct KernelScratch {
  std::size_t words = 0;
  std::vector<Word> common;     // R
  std::vector<Word> common_y;   // N(y) ∩ R
  std::vector<Word> single_y;   // N(x_k) ∩ N(y), k = 0..2
  std::vector<Word> pair_y;     // N(x_i) ∩ N(x_j) ∩ N(y), slots 0..2
  std::array<mpz_class, 6> t3, t6, inner;
  mpz_class tmp, ky;

  explicit KernelScratch(std::size_t w) : words(w), common(w), common_y(w), single_y(3 * w), pair_y(3 * w) {}
};

template <class... Rows>
std::size_t count_and(std::size_t words, const Rows*... rows) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount((rows[w] & ...)));
  return total;
}

// Weights of the six orderings of t via the cancellation identity. With A = |N(x1,y)|,
// B = |N(x1,x2,y)|, C = |N(x1,x2)|, F = |N(y,z)|, Q = |N(x1,y,z)|, P = |N(x1,x2,y,z)|:
//   6 w(O) = 1/C - sum_y [ (C-A)/(ABC) + sum_z ((C-A)FQ + (F-A)BC) / (ABCFQP) ].
template <Scalar S, class Hook>
std::optional<KernelFailure> triangle_kernel(const Graph& g, const Triangle& t, const std::vector<S>& inverse,
                                             const ExactTables* exact, KernelScratch<S>& s,
                                             std::array<S, 6>& out, std::uint64_t& b_sum,
                                             std::uint64_t& b_count, std::uint64_t& b_min, Hook& hook) {
  const std::size_t words = s.words;
  const std::array<Vertex, 3> xs = t.vertices();
  const std::array<const Word*, 3> rx{g.row(xs[0]).data(), g.row(xs[1]).data(), g.row(xs[2]).data()};
  for (std::size_t w = 0; w < words; ++w) s.common[w] = rx[0][w] & rx[1][w] & rx[2][w];
  const std::size_t common_size = count_and(words, s.common.data());
  if (common_size == 0) return KernelFailure{{xs[0], xs[1], xs[2]}};

  std::array<std::size_t, 3> c_pair{};
  c_pair[0] = count_and(words, rx[0], rx[1]);
  c_pair[1] = count_and(words, rx[0], rx[2]);
  c_pair[2] = count_and(words, rx[1], rx[2]);
  [[maybe_unused]] std::array<std::size_t, 3> deg{g.degree(xs[0]), g.degree(xs[1]), g.degree(xs[2])};

  std::array<S, 6> outer{};
  if constexpr (is_exact_v<S>) {
    for (int k = 0; k < 6; ++k) {
      s.t3[k] = 0;
      s.t6[k] = 0;
    }
  } else {
    outer.fill(S(0));
  }

  std::optional<KernelFailure> failure;
  VertexSet::for_each_bit(std::span<const Word>(s.common), [&](Vertex y) {
    if (failure) return;
    const Word* ry = g.row(y).data();
    for (std::size_t w = 0; w < words; ++w) s.common_y[w] = s.common[w] & ry[w];
    const std::size_t common_y_size = count_and(words, s.common_y.data());
    if (common_y_size == 0) {
      std::vector<Vertex> k4{xs[0], xs[1], xs[2], y};
      std::sort(k4.begin(), k4.end());
      failure = KernelFailure{std::move(k4)};
      return;
    }
    std::array<std::size_t, 3> a{};
    std::array<std::size_t, 3> b{};
    for (int k = 0; k < 3; ++k) {
      Word* dst = s.single_y.data() + k * words;
      for (std::size_t w = 0; w < words; ++w) dst[w] = rx[k][w] & ry[w];
      a[k] = count_and(words, static_cast<const Word*>(dst));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int slot = pair_slot(i, j);
        Word* dst = s.pair_y.data() + slot * words;
        const Word* src = s.single_y.data() + i * words;
        for (std::size_t w = 0; w < words; ++w) dst[w] = src[w] & rx[j][w];
        b[slot] = count_and(words, static_cast<const Word*>(dst));
      }

    std::array<S, 6> term1{};
    if constexpr (is_exact_v<S>) {
      for (int k = 0; k < 6; ++k) {
        const int i = kOrderPairs[k][0];
        const int slot = pair_slot(i, kOrderPairs[k][1]);
        const long num = static_cast<long>(c_pair[slot]) - static_cast<long>(a[i]);
        s.ky = exact->cofactor[a[i]] * exact->cofactor[b[slot]];
        s.ky *= exact->cofactor[c_pair[slot]];
        s.t3[k] += s.ky * num;
        s.inner[k] = 0;
      }
    } else {
      for (int k = 0; k < 6; ++k) {
        const int i = kOrderPairs[k][0];
        const int slot = pair_slot(i, kOrderPairs[k][1]);
        term1[k] = inverse[b[slot]] * (inverse[a[i]] - inverse[c_pair[slot]]);
        outer[k] += term1[k];
      }
    }

    const std::size_t deg_y = g.degree(y);
    VertexSet::for_each_bit(std::span<const Word>(s.common_y), [&](Vertex z) {
      const Word* rz = g.row(z).data();
      const std::size_t f = count_and(words, ry, rz);
      std::array<std::size_t, 3> q{};
      std::array<std::size_t, 3> p{};
      for (int k = 0; k < 3; ++k) q[k] = count_and(words, static_cast<const Word*>(s.single_y.data() + k * words), rz);
      for (int k = 0; k < 3; ++k) p[k] = count_and(words, static_cast<const Word*>(s.pair_y.data() + k * words), rz);
      const std::uint64_t b_value = deg_y - f;
      b_sum += b_value;
      ++b_count;
      b_min = std::min(b_min, b_value);

      for (int k = 0; k < 6; ++k) {
        const int i = kOrderPairs[k][0];
        const int slot = pair_slot(i, kOrderPairs[k][1]);
        if constexpr (is_exact_v<S>) {
          const long aa = static_cast<long>(a[i]);
          const long num = (static_cast<long>(c_pair[slot]) - aa) * static_cast<long>(f * q[i]) +
                           (static_cast<long>(f) - aa) * static_cast<long>(b[slot] * c_pair[slot]);
          if (num != 0) {
            s.tmp = exact->cofactor[f] * exact->cofactor[q[i]];
            s.tmp *= exact->cofactor[p[slot]];
            s.inner[k] += s.tmp * num;
          }
        } else {
          outer[k] += inverse[p[slot]] * (term1[k] + inverse[q[i]] * (inverse[a[i]] - inverse[f]));
        }
      }
      if constexpr (Hook::enabled) {
        for (int k = 0; k < 6; ++k) {
          const int i = kOrderPairs[k][0];
          const int j = kOrderPairs[k][1];
          const int slot = pair_slot(i, j);
          KernelSample sample;
          sample.o = {xs[i], xs[j], xs[3 - i - j]};
          sample.y = y;
          sample.z = z;
          sample.deg_x1 = deg[i];
          sample.deg_y = deg_y;
          sample.edge_x1x2 = c_pair[slot];
          sample.edge_x1y = a[i];
          sample.edge_yz = f;
          sample.k4_x1x2y = b[slot];
          sample.k4_x1yz = q[i];
          sample.k5_x1x2yz = p[slot];
          sample.common = common_size;
          sample.common_y = common_y_size;
          hook(sample);
        }
      }
    });

    if constexpr (is_exact_v<S>) {
      for (int k = 0; k < 6; ++k) {
        const int i = kOrderPairs[k][0];
        const int slot = pair_slot(i, kOrderPairs[k][1]);
        s.ky = exact->cofactor[a[i]] * exact->cofactor[b[slot]];
        s.ky *= exact->cofactor[c_pair[slot]];
        s.t6[k] += s.ky * s.inner[k];
      }
    }
  });
  if (failure) return failure;

  if constexpr (is_exact_v<S>) {
    const mpz_class l3 = exact->lcm * exact->lcm * exact->lcm;
    for (int k = 0; k < 6; ++k) {
      const int slot = pair_slot(kOrderPairs[k][0], kOrderPairs[k][1]);
      // 6 w = 1/C - t3 / L^3 - t6 / L^6, put over L^6.
      mpz_class num = exact->cofactor[c_pair[slot]] * exact->lcm * exact->lcm;
      num *= exact->lcm * exact->lcm * exact->lcm;
      num -= s.t3[k] * l3;
      num -= s.t6[k];
      Rational w(num, mpz_class(6 * l3 * l3));
      w.canonicalize();
      out[k] = std::move(w);
    }
  } else {
    for (int k = 0; k < 6; ++k) {
      const int slot = pair_slot(kOrderPairs[k][0], kOrderPairs[k][1]);
      out[k] = (inverse[c_pair[slot]] - outer[k]) / S(6);
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Triangle weights w_G(T) = sum of the six ordered weights, edge sums, the minimum
// weight and b-statistics. Throws DelegationUndefined for the lexicographically first
// triangle without a K4 extension or with a K4 that has no K5 extension. The hook sees
// every (O, y, z) with its neighborhood counts; each worker gets its own copy, merged
// back into hook in chunk order.
template <Scalar S, class Hook>
TriangleWeightReport<S> decompose(const Graph& g, std::size_t threads, Hook& hook) {
  static_assert(std::is_same_v<S, double> || std::is_same_v<S, long double> || std::is_same_v<S, Rational>,
                "decompose supports floating point or Rational weights");
  TriangleWeightReport<S> report;
  report.n = g.order();
  report.min_degree = g.min_degree();
  report.mode = is_exact_v<S> ? NumericMode::exact : NumericMode::floating;
  report.triangles = enumerate_triangles(g);
  const std::size_t count = report.triangles.size();
  report.ordered_weights.resize(count);

  std::vector<S> inverse;
  std::optional<detail::ExactTables> exact;
  if constexpr (is_exact_v<S>) {
    exact.emplace(g.order());
  } else {
    inverse.assign(g.order() + 1, S(0));
    for (std::size_t k = 1; k <= g.order(); ++k) inverse[k] = S(1) / static_cast<S>(k);
  }

  struct Partial {
    std::size_t begin = 0;
    std::uint64_t b_sum = 0, b_count = 0, b_min = std::numeric_limits<std::uint64_t>::max();
    Hook hook;
  };
  std::vector<std::optional<detail::KernelFailure>> failures(count);
  std::vector<Partial> partials;
  std::mutex mutex;

  parallel_for(count, threads, [&](std::size_t begin, std::size_t end) {
    detail::KernelScratch<S> scratch(g.words_per_row());
    Partial local{begin, 0, 0, std::numeric_limits<std::uint64_t>::max(), hook};
    for (std::size_t idx = begin; idx < end; ++idx) {
      failures[idx] = detail::triangle_kernel<S>(g, report.triangles[idx], inverse, exact ? &*exact : nullptr,
                                                 scratch, report.ordered_weights[idx], local.b_sum,
                                                 local.b_count, local.b_min, local.hook);
      if (failures[idx]) break;
    }
    std::lock_guard lock(mutex);
    partials.push_back(std::move(local));
  });

  for (std::size_t idx = 0; idx < count; ++idx)
    if (failures[idx]) throw DelegationUndefined(failures[idx]->prefix);

  std::sort(partials.begin(), partials.end(), [](const Partial& l, const Partial& r) { return l.begin < r.begin; });
  std::uint64_t b_sum = 0, b_count = 0, b_min = std::numeric_limits<std::uint64_t>::max();
  for (Partial& part : partials) {
    b_sum += part.b_sum;
    b_count += part.b_count;
    b_min = std::min(b_min, part.b_min);
    if constexpr (Hook::enabled) hook.merge(part.hook);
  }
  report.b_samples = b_count;
  if (b_count > 0) {
    const double n = static_cast<double>(g.order());
    report.b_mean = static_cast<double>(b_sum) / static_cast<double>(b_count) / n;
    report.b_min = static_cast<double>(b_min) / n;
  }

  report.weights.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const auto& ow = report.ordered_weights[idx];
    S w = ow[0];
    for (int k = 1; k < 6; ++k) w += ow[k];
    report.weights.push_back(std::move(w));
    if (!report.min_weight || report.weights.back() < *report.min_weight) {
      report.min_weight = report.weights.back();
      report.min_witness = report.triangles[idx];
    }
  }

  const EdgeIndex index(g);
  report.edges = g.edges();
  report.edge_sums.assign(report.edges.size(), S(0));
  report.edge_triangles.assign(report.edges.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    const Triangle& t = report.triangles[idx];
    const std::array<std::array<Vertex, 2>, 3> sides{{{t.a, t.b}, {t.a, t.c}, {t.b, t.c}}};
    for (const auto& [u, v] : sides) {
      const std::size_t e = index(u, v);
      report.edge_sums[e] += report.weights[idx];
      ++report.edge_triangles[e];
    }
  }
  for (std::size_t e = 0; e < report.edges.size(); ++e)
    if (report.edge_triangles[e] == 0) report.uncovered_edges.push_back(report.edges[e]);
  return report;
}

template <Scalar S>
TriangleWeightReport<S> decompose(const Graph& g, std::size_t threads = 1) {
  NoKernelHook hook;
  return decompose<S>(g, threads, hook);
}

enum class EdgeSumStatus { pass, fail, uncoverable_edge };

inline std::string_view to_string(EdgeSumStatus s) {
  switch (s) {
    case EdgeSumStatus::pass: return "pass";
    case EdgeSumStatus::fail: return "fail";
    case EdgeSumStatus::uncoverable_edge: return "uncoverable_edge";
  }
  return "?";
}

struct EdgeSumCheck {
  EdgeSumStatus status = EdgeSumStatus::pass;
  std::optional<Edge> worst_edge;
  double worst_error = 0.0;  // max |sum - 1| over covered edges
  std::vector<Edge> uncovered;
  std::size_t checked = 0;
};

// Every edge lying in a triangle must carry total weight 1: exactly in exact mode,
// within tol otherwise. Edges in no triangle make the decomposition impossible.
template <Scalar S>
EdgeSumCheck verify_edge_sums(const TriangleWeightReport<S>& report, double tol = 1e-9) {
  EdgeSumCheck out;
  out.uncovered = report.uncovered_edges;
  bool failed = false;
  for (std::size_t e = 0; e < report.edges.size(); ++e) {
    if (report.edge_triangles[e] == 0) continue;
    ++out.checked;
    const S diff = report.edge_sums[e] - S(1);
    const double err = std::abs(to_double(diff));
    failed = failed || (is_exact_v<S> ? !(diff == S(0)) : !(err <= tol));
    if (!out.worst_edge || err > out.worst_error) {
      out.worst_edge = report.edges[e];
      out.worst_error = err;
    }
  }
  if (!out.uncovered.empty()) out.status = EdgeSumStatus::uncoverable_edge;
  else if (failed) out.status = EdgeSumStatus::fail;
  return out;
}

}  // namespace tridecomp
