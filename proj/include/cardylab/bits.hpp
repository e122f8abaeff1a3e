#pragma once

#include <boost/container/small_vector.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>

namespace cardylab {

/// Fixed-size bit set with small-buffer storage. Sized for half-edge sets of
/// enumerable domains (no heap below 256 bits), grows for larger ones.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  std::size_t words() const { return w_.size(); }
  const std::uint64_t* data() const { return w_.data(); }

  /// Overwrites word i, masking bits past size() on the last word.
  void set_word(std::size_t i, std::uint64_t w) {
    if (i + 1 == w_.size() && (n_ & 63)) w &= (std::uint64_t(1) << (n_ & 63)) - 1;
    w_[i] = w;
  }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  Bits& operator^=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  friend Bits operator^(Bits a, const Bits& b) {
    a ^= b;
    return a;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        fn(wi * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  boost::container::small_vector<std::uint64_t, 4> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return static_cast<std::size_t>(b.hash()); }
};

}  // namespace cardylab
