#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tridecomp/errors.hpp"
#include "tridecomp/scalar.hpp"

namespace tridecomp {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Mask of the valid bits in the last word of an n-bit row.
constexpr Word tail_mask(std::size_t n) {
  const std::size_t rem = n % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

// popcount(a & b & ...) over equally sized rows, without materializing the intersection.
template <class... Rows>
std::size_t and_count(std::span<const Word> first, Rows... rest) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < first.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount((first[w] & ... & rest[w])));
  }
  return total;
}

// Fixed-width bit vector over V(G) = {0, ..., n-1}.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    if (!s.words_.empty()) s.words_.back() &= tail_mask(universe);
    return s;
  }

  static VertexSet of(std::size_t universe, std::initializer_list<Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  static VertexSet of(std::size_t universe, std::span<const Vertex> vs) {
    VertexSet s(universe);
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  static VertexSet from_words(std::size_t universe, std::span<const Word> words) {
    if (words.size() != word_count(universe)) throw std::invalid_argument("row width mismatch");
    VertexSet s(universe);
    std::copy(words.begin(), words.end(), s.words_.begin());
    if (!s.words_.empty()) s.words_.back() &= tail_mask(universe);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }
  std::span<const Word> words() const noexcept { return words_; }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  bool contains(Vertex v) const {
    check(v);
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) {
    check(v);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  VertexSet& operator&=(std::span<const Word> row) {
    assert(row.size() == words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= row[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) { return *this &= o.words(); }
  VertexSet& operator|=(const VertexSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet l, const VertexSet& r) { return l &= r; }
  friend VertexSet operator|(VertexSet l, const VertexSet& r) { return l |= r; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool is_subset_of(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  // Visits members in increasing order.
  template <class F>
  void for_each(F&& f) const {
    for_each_bit(words_, std::forward<F>(f));
  }

  template <class F>
  static void for_each_bit(std::span<const Word> words, F&& f) {
    for (std::size_t i = 0; i < words.size(); ++i) {
      Word w = words[i];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_) throw std::out_of_range("vertex outside the set universe");
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;  // u < v
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class GraphBuilder;

// Immutable simple graph with bitset adjacency rows.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  VertexSet neighbors(Vertex v) const { return VertexSet::from_words(n_, row(v)); }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::size_t min_degree() const {
    return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
  }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // Lexicographic (u < v) edge list.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < n_; ++u) {
      VertexSet::for_each_bit(row(u), [&](Vertex v) {
        if (u < v) out.push_back({u, v});
      });
    }
    return out;
  }

  bool is_clique(std::span<const Vertex> vs) const {
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (vs[i] >= n_) return false;
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        if (vs[i] == vs[j] || !adjacent(vs[i], vs[j])) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Graph& l, const Graph& r) { return l.n_ == r.n_ && l.bits_ == r.bits_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Word> bits_;
  std::vector<std::size_t> degrees_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n), words_(word_count(n)), bits_(n * word_count(n), 0) {
    if (n == 0) throw EmptyGraphError();
  }

  std::size_t order() const noexcept { return n_; }

  // Duplicates collapse; loops are rejected.
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) throw std::out_of_range("edge endpoint outside the vertex range");
    if (u == v) throw std::invalid_argument("loop edge");
    bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    bits_[static_cast<std::size_t>(v) * words_ + u / kWordBits] |= Word{1} << (u % kWordBits);
    return *this;
  }

  bool has_edge(Vertex u, Vertex v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  Graph build() const {
    Graph g;
    g.n_ = n_;
    g.words_ = words_;
    g.bits_ = bits_;
    g.degrees_.resize(n_);
    std::size_t twice = 0;
    for (Vertex v = 0; v < n_; ++v) {
      g.degrees_[v] = and_count(g.row(v));
      twice += g.degrees_[v];
    }
    g.edge_count_ = twice / 2;
    return g;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> bits_;
};

// Normalized size of a vertex set: count / n. Exact by construction.
struct Density {
  std::size_t count = 0;
  std::size_t n = 1;

  template <Scalar S>
  S value() const {
    return ratio<S>(static_cast<std::int64_t>(count), static_cast<std::int64_t>(n));
  }
  friend bool operator==(const Density&, const Density&) = default;
};

// Intersection of the neighborhoods of s; the whole vertex set when s is empty.
inline VertexSet common_neighbors(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("vertex set universe differs from graph order");
  VertexSet out = VertexSet::full(g.order());
  s.for_each([&](Vertex v) { out &= g.row(v); });
  return out;
}

inline Density nhat(const Graph& g, const VertexSet& s) {
  return {common_neighbors(g, s).count(), g.order()};
}

inline Density nhat(const Graph& g, std::initializer_list<Vertex> vs) {
  return nhat(g, VertexSet::of(g.order(), vs));
}

// |N(v_1) ∩ ... ∩ N(v_k)| for a short list of vertices.
inline std::size_t common_count(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) return g.order();
  std::size_t total = 0;
  for (std::size_t w = 0; w < g.words_per_row(); ++w) {
    Word acc = ~Word{0};
    for (Vertex v : vs) acc &= g.row(v)[w];
    total += static_cast<std::size_t>(std::popcount(acc));
  }
  return total;
}

inline std::size_t common_count(const Graph& g, std::initializer_list<Vertex> vs) {
  return common_count(g, std::span<const Vertex>(vs.begin(), vs.size()));
}

}  // namespace tridecomp
