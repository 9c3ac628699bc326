#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tridecomp/errors.hpp"
#include "tridecomp/parallel.hpp"
#include "tridecomp/program/clamp.hpp"
#include "tridecomp/program/domain.hpp"
#include "tridecomp/program/objective.hpp"
#include "tridecomp/random.hpp"

namespace tridecomp::program {

inline constexpr std::size_t kSamplerRejectionLimit = 1'000'000;
// Vertex count used for sampled level-1/2 points, and the largest index sets drawn.
inline constexpr std::size_t kSampledVertexCount = 64;
inline constexpr std::size_t kSampledMaxTerms = 6;

template <Scalar S>
void require_program_d(const S& d) {
  if (!(d > S(0))) throw DomainError("d > 0");
  if (!(d < ratio<S>(1, 4))) throw DomainError("d < 1/4");
}

// Draws feasible points by sampling variables in table order, each uniformly inside
// the interval its earlier variables allow. One draw in ten is snapped to an interval
// end so the ramps' kinks and the clamped faces get exercised.
template <Scalar S>
class PointSampler {
 public:
  PointSampler(int level, S d, std::uint64_t seed) : level_(level), d_(std::move(d)), rng_(seed) {
    (void)level_variables(level);
    require_program_d(d_);
  }

  std::size_t rejections() const noexcept { return rejections_; }

  ProgramPoint<S> next() {
    for (;;) {
      if (auto pt = attempt(); pt && check_domain(*pt)) return *pt;
      if (++rejections_ >= kSamplerRejectionLimit) throw SamplerStarved(rejections_);
    }
  }

 private:
  std::optional<S> draw(const S& lo, const S& hi) {
    if (lo > hi + ScalarTraits<S>::slack()) return std::nullopt;
    const double u = uniform01(rng_);
    if (u < 0.05) return lo;
    if (u < 0.10) return hi;
    S v = lo + (hi - lo) * from_double<S>(uniform01(rng_));
    if (v > hi) v = hi;
    if (v < lo) v = lo;
    return v;
  }

  std::optional<ProgramPoint<S>> attempt() {
    using enum Var;
    const S one(1);
    const S zero(0);
    const S& d = d_;
    ProgramPoint<S> pt(level_, d);
    const auto put = [&](Var v, const S& lo, const S& hi) {
      auto value = draw(lo, hi);
      if (!value) return false;
      pt.set(v, std::move(*value));
      return true;
    };
    if (level_ >= 9) {
      if (level_ == 9 && !put(a, zero, d)) return std::nullopt;
      if (!put(b, zero, d)) return std::nullopt;
      return pt;
    }
    if (!put(x, one - d, one)) return std::nullopt;
    if (level_ >= 7) {
      if (level_ == 7 && !put(y, one - d, one)) return std::nullopt;
      if (!put(a, zero, d) || !put(b, zero, d)) return std::nullopt;
      return pt;
    }
    if (level_ <= 2) {
      if (!put(e0, pt[x] - d, pt[x])) return std::nullopt;
      if (!vectors(pt)) return std::nullopt;
      return pt;
    }
    if (!put(y, one - d, one) || !put(e0, pt[x] - d, pt[x]) || !put(e, pt[x] + pt[y] - one, one) ||
        !put(f, pt[y] - d, pt[y]))
      return std::nullopt;
    if (level_ == 6) return pt;
    if (!put(q0, pt[e] + pt[e0] - pt[x], one)) return std::nullopt;
    if (level_ == 5) return pt;
    if (!put(q, pt[e] + pt[f] - pt[y], one) || !put(p, pt[q0] + pt[f] - pt[y], one) || !put(r0, zero, pt[e0]) ||
        !put(r, zero, pt[q0]))
      return std::nullopt;
    return pt;
  }

  bool vectors(ProgramPoint<S>& pt) {
    const S one(1);
    const S& d = d_;
    const S& x = pt[Var::x];
    const S& e0 = pt[Var::e0];
    pt.set_vertex_count(kSampledVertexCount);
    const std::size_t outer = uniform_below(rng_, kSampledMaxTerms + 1);
    for (std::size_t i = 0; i < outer; ++i) {
      OuterTerm<S> t;
      auto y = draw(one - d, one);
      if (!y) return false;
      t.y = *y;
      auto e = draw(x + t.y - one, one);
      if (!e) return false;
      t.e = *e;
      auto q0 = draw(t.e + e0 - x, one);
      if (!q0) return false;
      t.q0 = *q0;
      const std::size_t inner = level_ == 1 ? uniform_below(rng_, kSampledMaxTerms + 1) : 1;
      for (std::size_t j = 0; j < inner; ++j) {
        InnerTerm<S> u;
        auto f = draw(t.y - d, t.y);
        if (!f) return false;
        u.f = *f;
        auto q = draw(t.e + u.f - t.y, one);
        if (!q) return false;
        u.q = *q;
        auto p = draw(t.q0 + u.f - t.y, one);
        if (!p) return false;
        u.p = *p;
        t.inner.push_back(std::move(u));
      }
      if (level_ == 2) {
        auto r = draw(S(0), t.q0);
        if (!r) return false;
        t.r = *r;
      }
      pt.outer().push_back(std::move(t));
    }
    return true;
  }

  int level_;
  S d_;
  Rng rng_;
  std::size_t rejections_ = 0;
};

template <Scalar S>
struct SearchResult {
  ProgramPoint<S> best_point;
  S best_value{};
  std::size_t evaluations = 0;
};

// Maximizes the level-9 or level-10 objective over the uniform grid {i d / (res-1)}
// on [0,d]^k; ties keep the first point in index order (a outer, b inner).
template <Scalar S>
SearchResult<S> grid_search(int level, const S& d, std::size_t resolution, std::size_t threads = 1) {
  if (level != 9 && level != 10) throw std::invalid_argument("grid search covers levels 9 and 10");
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  require_program_d(d);
  const auto step = [&](std::size_t i) {
    return d * ratio<S>(static_cast<std::int64_t>(i), static_cast<std::int64_t>(resolution - 1));
  };
  const std::size_t rows = level == 9 ? resolution : 1;
  const std::size_t cols = resolution;
  struct Best {
    std::size_t begin = 0;
    std::optional<S> value;
    std::size_t i = 0, j = 0;
  };
  std::vector<Best> partial;
  std::mutex mutex;
  parallel_for(level == 9 ? rows : cols, threads, [&](std::size_t begin, std::size_t end) {
    Best best{begin, std::nullopt, 0, 0};
    const auto consider = [&](S value, std::size_t i, std::size_t j) {
      if (!best.value || value > *best.value) {
        best.value = std::move(value);
        best.i = i;
        best.j = j;
      }
    };
    if (level == 9) {
      std::vector<S> bs(cols);
      for (std::size_t j = 0; j < cols; ++j) bs[j] = step(j);
      for (std::size_t i = begin; i < end; ++i) {
        const S a = step(i);
        for (std::size_t j = 0; j < cols; ++j) consider(formula::level9(a, bs[j], d), i, j);
      }
    } else {
      for (std::size_t j = begin; j < end; ++j) consider(formula::level10(step(j), d), 0, j);
    }
    std::lock_guard lock(mutex);
    partial.push_back(std::move(best));
  });
  std::sort(partial.begin(), partial.end(), [](const Best& l, const Best& r) { return l.begin < r.begin; });
  Best best;
  for (Best& b : partial)
    if (b.value && (!best.value || *b.value > *best.value)) best = std::move(b);

  SearchResult<S> out;
  out.evaluations = rows * cols;
  out.best_value = *best.value;
  out.best_point = ProgramPoint<S>(level, d);
  if (level == 9) out.best_point.set(Var::a, step(best.i));
  out.best_point.set(Var::b, step(best.j));
  return out;
}

template <Scalar S>
struct ClampTestResult {
  int level = 3;
  std::size_t trials = 0;
  bool passed = true;
  // min over samples of objective(clamp_step(pt)) - objective(pt); at level 3 also of
  // W4 - max(0, W3).
  std::optional<S> worst_margin;
  std::optional<ProgramPoint<S>> worst_point;
  std::size_t failures = 0;
  std::size_t ramp_failures = 0;
};

// Samples feasible points and checks that clamping never lowers the objective (beyond
// 1e-12 for floating points, exactly otherwise); at level 3 also that the ramped
// objective dominates max(0, W3).
template <Scalar S>
ClampTestResult<S> random_clamp_test(int level, const S& d, std::size_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  PointSampler<S> sampler(level, d, seed);
  const S tol = is_exact_v<S> ? S(0) : from_double<S>(1e-12);
  ClampTestResult<S> out;
  out.level = level;
  out.trials = trials;
  const auto record = [&](const S& margin, const ProgramPoint<S>& pt) {
    if (!out.worst_margin || margin < *out.worst_margin) {
      out.worst_margin = margin;
      out.worst_point = pt;
    }
  };
  for (std::size_t t = 0; t < trials; ++t) {
    const ProgramPoint<S> pt = sampler.next();
    const S before = eval_objective(pt);
    if (level == 3) {
      const S ramped = objective_unchecked(pt.relabeled(4));
      const S margin = ramped - (before > S(0) ? before : S(0));
      record(margin, pt);
      if (margin < S(0) - tol) {
        ++out.ramp_failures;
        out.passed = false;
      }
    }
    const S after = eval_objective(clamp_step(pt));
    const S margin = after - before;
    record(margin, pt);
    if (margin < S(0) - tol) {
      ++out.failures;
      out.passed = false;
    }
  }
  return out;
}

// Every point visited by repeated clamp_step from pt through level 10, ending with b = 0.
template <Scalar S>
std::vector<ProgramPoint<S>> clamp_chain(const ProgramPoint<S>& pt) {
  std::vector<ProgramPoint<S>> chain{pt};
  while (chain.back().level() < kLastLevel) chain.push_back(clamp_step(chain.back()));
  chain.push_back(clamp_step(chain.back()));
  return chain;
}

}  // namespace tridecomp::program
