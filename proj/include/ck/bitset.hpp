#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace ck {

// Fixed-size dynamic bitset used for subsets of an algebra's universe.
// Words beyond the logical size stay zero; comparison and hashing rely on that.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }

  bool get(int i) const {
    assert(0 <= i && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(int i) {
    assert(0 <= i && i < n_);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(0 <= i && i < n_);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const Bitset& a, const Bitset& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.w_ < b.w_;
  }

  // Members in increasing index order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        out.push_back(int(wi) * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(int(wi) * 64 + b);
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace ck
