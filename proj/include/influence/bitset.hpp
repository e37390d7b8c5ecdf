#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace influence {

// Fixed-capacity set of vertex ids, backed by 64-bit words. The capacity is
// the vertex count of the base graph; position keys are exactly these sets.
class VertexSet {
public:
  VertexSet() = default;

  explicit VertexSet(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static VertexSet full(int nbits) {
    VertexSet s(nbits);
    for (int w = 0; w < static_cast<int>(s.words_.size()); ++w) s.words_[w] = ~0ULL;
    s.trim();
    return s;
  }

  int capacity() const { return nbits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1ULL; }
  void set(int i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_) {
      if (w) return false;
    }
    return true;
  }
  bool any() const { return !empty(); }

  VertexSet &operator&=(const VertexSet &o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet &operator|=(const VertexSet &o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // Set difference: removes o's elements.
  VertexSet &operator-=(const VertexSet &o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet &b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet &b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet &b) { return a -= b; }

  bool is_subset_of(const VertexSet &o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }

  bool intersects(const VertexSet &o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }

  bool operator==(const VertexSet &o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

  // First set bit, or -1 when empty.
  int first() const {
    for (size_t w = 0; w < words_.size(); ++w) {
      if (words_[w]) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    }
    return -1;
  }

  // First set bit strictly after i, or -1.
  int next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    size_t w = static_cast<size_t>(i) >> 6;
    uint64_t cur = words_[w] & (~0ULL << (i & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64 + std::countr_zero(cur));
      if (++w >= words_.size()) return -1;
      cur = words_[w];
    }
  }

  template <class F> void for_each(F f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      uint64_t cur = words_[w];
      while (cur) {
        f(static_cast<int>(w * 64 + std::countr_zero(cur)));
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  std::string to_string() const {
    std::string s = "{";
    bool sep = false;
    for_each([&](int i) {
      if (sep) s += ',';
      s += std::to_string(i);
      sep = true;
    });
    s += '}';
    return s;
  }

  size_t hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<uint64_t>(nbits_);
    for (uint64_t w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
      h ^= h >> 33;
    }
    return static_cast<size_t>(h);
  }

private:
  void trim() {
    int tail = nbits_ & 63;
    if (tail && !words_.empty()) words_.back() &= (1ULL << tail) - 1;
  }

  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

struct VertexSetHash {
  size_t operator()(const VertexSet &s) const { return s.hash(); }
};

} // namespace influence
