#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace isocut {

using VertexId = int;

/// Membership bitset over [n] with a cached cardinality.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(int universe, std::initializer_list<VertexId> members);
  VertexSet(int universe, std::span<const VertexId> members);

  static VertexSet full(int universe);

  int universe() const noexcept { return universe_; }
  int size() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  bool contains(VertexId v) const noexcept {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(VertexId v);
  void erase(VertexId v);

  VertexSet complement() const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet operator-(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  int intersection_size(const VertexSet& other) const;

  /// Ascending member list.
  std::vector<VertexId> members() const;
  VertexId first() const;  // -1 when empty

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<VertexId>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  bool operator==(const VertexSet& other) const noexcept {
    return universe_ == other.universe_ && words_ == other.words_;
  }
  /// Lexicographic order on the bit pattern (lowest vertex id most significant
  /// in the sense of std::vector comparison of words).
  bool operator<(const VertexSet& other) const noexcept {
    if (universe_ != other.universe_) return universe_ < other.universe_;
    return words_ < other.words_;
  }

 private:
  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.universe());
    for (auto w : s.words()) h = h * 1099511628211ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};

}  // namespace isocut
