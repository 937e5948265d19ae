#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace cliquearch {

using VertexId = std::uint32_t;

/// Fixed-capacity bit set over [0, capacity). All binary operations require
/// equal capacities; that is the caller's contract and is only asserted.
class VertexSet {
 public:
  static constexpr VertexId npos = std::numeric_limits<VertexId>::max();

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  static VertexSet full(std::size_t capacity) {
    VertexSet s(capacity);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet of(std::size_t capacity, const Range& vertices) {
    VertexSet s(capacity);
    for (auto v : vertices) s.set(static_cast<VertexId>(v));
    return s;
  }

  std::size_t capacity() const noexcept { return capacity_; }

  bool test(VertexId v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(VertexId v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(VertexId v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// |this ∩ other| without materializing the intersection.
  std::size_t count_and(const VertexSet& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return c;
  }

  bool intersects(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  bool is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  VertexId first() const noexcept { return scan_from(0); }

  VertexId next(VertexId v) const noexcept {
    return v + 1 >= capacity_ ? npos : scan_from(v + 1);
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        const auto bit = static_cast<VertexId>(std::countr_zero(w));
        fn(static_cast<VertexId>(i * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<VertexId> to_vector() const {
    std::vector<VertexId> out;
    out.reserve(count());
    for_each([&](VertexId v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Writes a ∩ b into *this without reallocating.
  void assign_and(const VertexSet& a, const VertexSet& b) {
    capacity_ = a.capacity_;
    words_.resize(a.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = a.words_[i] & b.words_[i];
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  VertexId scan_from(std::size_t start) const noexcept {
    std::size_t i = start >> 6;
    if (i >= words_.size()) return npos;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
    while (true) {
      if (w) return static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      if (++i >= words_.size()) return npos;
      w = words_[i];
    }
  }

  void trim() noexcept {
    if (capacity_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
  }

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cliquearch
