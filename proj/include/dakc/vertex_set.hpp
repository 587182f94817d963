#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace dakc {

// Internal vertex index, contiguous in [0, n).
using VertexId = std::int32_t;

// Dense bitset over the vertex universe [0, n).
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    const_iterator() = default;
    const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) { seek(); }

    VertexId operator*() const { return static_cast<VertexId>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      const_iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void seek();

    const VertexSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<VertexId> members);
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return n_; }
  bool contains(VertexId v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
  }
  void insert(VertexId v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(VertexId v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const;
  bool empty() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  // Set difference.
  VertexSet& operator-=(const VertexSet& other);
  VertexSet complement() const;

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& other) const = default;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, n_); }

  // Members in increasing order.
  std::vector<VertexId> to_vector() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

inline void VertexSet::const_iterator::seek() {
  const std::size_t n = set_->n_;
  while (pos_ < n) {
    const std::uint64_t word = set_->words_[pos_ >> 6] >> (pos_ & 63);
    if (word != 0) {
      pos_ += static_cast<std::size_t>(std::countr_zero(word));
      if (pos_ > n) pos_ = n;
      return;
    }
    pos_ = (pos_ | 63) + 1;
  }
  pos_ = n;
}

}  // namespace dakc
