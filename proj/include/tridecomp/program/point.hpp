#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tridecomp/scalar.hpp"

namespace tridecomp::program {

// Named scalar variables of the program chain. a and b replace e0 and f from level 7
// on: e0 = x - a, f = y - b.
enum class Var : std::uint8_t { x, y, e0, e, f, q0, q, p, r0, r, a, b };
inline constexpr std::size_t kVarCount = 12;

inline constexpr std::array<std::string_view, kVarCount> kVarNames{"x", "y", "e0", "e", "f", "q0",
                                                                   "q", "p", "r0", "r", "a", "b"};

inline std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

inline Var parse_var(std::string_view name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  throw std::invalid_argument("unknown program variable: " + std::string(name));
}

inline constexpr int kFirstLevel = 1;
inline constexpr int kLastLevel = 10;
// Levels 1 and 2 keep per-index vectors; they exist to exercise the symmetrization
// steps and are capped at this many outer and inner terms.
inline constexpr std::size_t kMaxVectorTerms = 16;

// Scalar variables carried at each level (levels 1-2 additionally carry vectors).
inline std::vector<Var> level_variables(int level) {
  using enum Var;
  switch (level) {
    case 1:
    case 2: return {x, e0};
    case 3:
    case 4: return {x, y, e0, e, f, q0, q, p, r0, r};
    case 5: return {x, y, e0, e, f, q0};
    case 6: return {x, y, e0, e, f};
    case 7: return {x, y, a, b};
    case 8: return {x, a, b};
    case 9: return {a, b};
    case 10: return {b};
    default: throw std::invalid_argument("program level must be in 1..10, got " + std::to_string(level));
  }
}

// Inner (j-indexed) block: f_{i,j}, q_{i,j}, p_{i,j}.
template <Scalar S>
struct InnerTerm {
  S f{};
  S q{};
  S p{};
};

// Outer (i-indexed) block. Level 1 keeps all R_i inner terms; level 2 keeps exactly
// one inner term and the normalized count r_i.
template <Scalar S>
struct OuterTerm {
  S y{};
  S e{};
  S q0{};
  std::vector<InnerTerm<S>> inner;
  S r{};
};

template <Scalar S>
class ProgramPoint {
 public:
  ProgramPoint() = default;
  ProgramPoint(int level, S d) : level_(level), d_(std::move(d)) { (void)level_variables(level); }

  int level() const noexcept { return level_; }
  const S& d() const noexcept { return d_; }

  bool has(Var v) const { return present_.test(static_cast<std::size_t>(v)); }

  const S& operator[](Var v) const {
    if (!has(v)) throw std::out_of_range("variable " + std::string(var_name(v)) + " is not set at this level");
    return values_[static_cast<std::size_t>(v)];
  }

  ProgramPoint& set(Var v, S value) {
    values_[static_cast<std::size_t>(v)] = std::move(value);
    present_.set(static_cast<std::size_t>(v));
    return *this;
  }

  ProgramPoint& unset(Var v) {
    present_.reset(static_cast<std::size_t>(v));
    values_[static_cast<std::size_t>(v)] = S{};
    return *this;
  }

  // True when exactly the level's scalar variables are populated.
  bool well_formed() const {
    std::bitset<kVarCount> want;
    for (Var v : level_variables(level_)) want.set(static_cast<std::size_t>(v));
    return want == present_;
  }

  // Levels 1-2 only.
  std::vector<OuterTerm<S>>& outer() { return outer_; }
  const std::vector<OuterTerm<S>>& outer() const { return outer_; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  void set_vertex_count(std::size_t n) { vertex_count_ = n; }

  ProgramPoint relabeled(int level) const {
    ProgramPoint out = *this;
    out.level_ = level;
    return out;
  }

 private:
  int level_ = 3;
  S d_{};
  std::array<S, kVarCount> values_{};
  std::bitset<kVarCount> present_;
  std::vector<OuterTerm<S>> outer_;
  std::size_t vertex_count_ = 0;
};

template <Scalar S>
ProgramPoint<S> make_point(int level, S d, std::initializer_list<std::pair<Var, S>> values) {
  ProgramPoint<S> pt(level, std::move(d));
  for (const auto& [v, val] : values) pt.set(v, val);
  return pt;
}

}  // namespace tridecomp::program
