#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace p6 {

// Fixed-universe bitset of vertex ids. All solver set operations are bitwise
// over 64-bit words; sets from different universes must never be mixed.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static VertexSet full(int n) {
    VertexSet s(n);
    for (int i = 0; i < n; i++) s.set(i);
    return s;
  }
  static VertexSet of(int n, std::initializer_list<int> vs) {
    VertexSet s(n);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool get(int v) const {
    assert(v >= 0 && v < n_);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] |= uint64_t{1} << (v & 63);
  }
  void reset(int v) {
    assert(v >= 0 && v < n_);
    w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (uint64_t w : w_) {
      if (w) return false;
    }
    return true;
  }

  int first() const {
    for (size_t i = 0; i < w_.size(); i++) {
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    }
    return -1;
  }
  // Smallest set bit strictly greater than v, or -1.
  int next(int v) const {
    int i = (v + 1) >> 6;
    if (i >= static_cast<int>(w_.size())) return -1;
    uint64_t w = w_[i] & (~uint64_t{0} << ((v + 1) & 63));
    while (true) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i >= static_cast<int>(w_.size())) return -1;
      w = w_[i];
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }
  int count_and(const VertexSet& o) const {
    assert(n_ == o.n_);
    int c = 0;
    for (size_t i = 0; i < w_.size(); i++) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); i++) {
      if (w_[i] & ~o.w_[i]) return false;
    }
    return true;
  }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    assert(a.n_ == b.n_);
    return a.w_ == b.w_;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  struct iterator {
    const VertexSet* s;
    int v;
    int operator*() const { return v; }
    iterator& operator++() {
      v = s->next(v);
      return *this;
    }
    bool operator!=(const iterator& o) const { return v != o.v; }
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace p6
