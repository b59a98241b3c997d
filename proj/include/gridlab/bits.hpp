#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace gridlab {

inline int bit_words(int nbits) { return nbits <= 0 ? 0 : (nbits + 63) / 64; }

// Fixed-size bit vector over vertex ids. The word span is exposed so graph
// adjacency rows and vertex sets can be combined without copies.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), w_(bit_words(n), 0) {}

  static Bits full(int n) {
    Bits b(n);
    for (auto& x : b.w_) x = ~uint64_t(0);
    b.clear_tail();
    return b;
  }
  static Bits of(int n, const std::vector<int>& xs) {
    Bits b(n);
    for (int x : xs) b.set(x);
    return b;
  }

  int size() const { return n_; }
  bool test(int i) const { return (w_[size_t(i) >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[size_t(i) >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  bool any() const {
    for (uint64_t x : w_)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bits& o) const {
    for (size_t k = 0; k < w_.size(); k++)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(std::span<const uint64_t> o) const {
    size_t m = std::min(w_.size(), o.size());
    for (size_t k = 0; k < m; k++)
      if (w_[k] & o[k]) return true;
    return false;
  }

  void or_with(std::span<const uint64_t> o) {
    for (size_t k = 0; k < w_.size() && k < o.size(); k++) w_[k] |= o[k];
  }
  void and_with(std::span<const uint64_t> o) {
    for (size_t k = 0; k < w_.size(); k++) w_[k] &= k < o.size() ? o[k] : 0;
  }
  void andnot_with(std::span<const uint64_t> o) {
    for (size_t k = 0; k < w_.size() && k < o.size(); k++) w_[k] &= ~o[k];
  }
  void xor_with(std::span<const uint64_t> o) {
    for (size_t k = 0; k < w_.size() && k < o.size(); k++) w_[k] ^= o[k];
  }
  void flip_all() {
    for (auto& x : w_) x = ~x;
    clear_tail();
  }

  std::span<const uint64_t> words() const { return w_; }
  std::span<uint64_t> words() { return w_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size_t(count()));
    for (size_t k = 0; k < w_.size(); k++) {
      uint64_t x = w_[k];
      while (x) {
        out.push_back(int(k * 64 + size_t(std::countr_zero(x))));
        x &= x - 1;
      }
    }
    return out;
  }

  int find_first() const { return find_from(0); }
  int find_next(int prev) const { return find_from(prev + 1); }

  bool operator==(const Bits&) const = default;

 private:
  void clear_tail() {
    if (n_ % 64 && !w_.empty()) w_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
  }
  int find_from(int start) const {
    if (start >= n_) return -1;
    size_t k = size_t(start) >> 6;
    uint64_t x = w_[k] & (~uint64_t(0) << (start & 63));
    while (true) {
      if (x) return int(k * 64 + size_t(std::countr_zero(x)));
      if (++k >= w_.size()) return -1;
      x = w_[k];
    }
  }

  int n_ = 0;
  std::vector<uint64_t> w_;
};

template <class F>
void for_each_bit(std::span<const uint64_t> w, F&& f) {
  for (size_t k = 0; k < w.size(); k++) {
    uint64_t x = w[k];
    while (x) {
      f(int(k * 64 + size_t(std::countr_zero(x))));
      x &= x - 1;
    }
  }
}

}  // namespace gridlab
