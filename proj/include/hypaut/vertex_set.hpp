#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "hypaut/errors.hpp"

namespace hypaut {

using VertexId = std::uint32_t;

/// Membership bitset over the vertex range [0, universe) of one graph.
///
/// Sets over different universes never compare equal. Ordering (`lex_less`)
/// compares the ascending member lists lexicographically, which is the order
/// used for every witness tie-break in the library.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
      : VertexSet(universe) {
    for (VertexId v : members) insert(v);
  }

  template <class Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<VertexId>(v));
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(VertexId v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u) != 0;
  }

  void insert(VertexId v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void erase(VertexId v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  std::optional<VertexId> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] != 0) {
        return static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
      }
    }
    return std::nullopt;
  }

  // Visits members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    out.reserve(size());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const { return full(universe_) - *this; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(VertexId v) const {
    if (v >= universe_) {
      throw InputError("vertex " + std::to_string(v) + " out of range [0, " +
                       std::to_string(universe_) + ")");
    }
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw InputError("vertex sets over different universes");
  }
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
    }
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// Lexicographic comparison of ascending member lists.
inline bool lex_less(const VertexSet& a, const VertexSet& b) {
  auto x = a.members();
  auto y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Size first, then lexicographic: the order used by the subset searches.
inline bool size_lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

}  // namespace hypaut
