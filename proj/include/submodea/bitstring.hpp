#ifndef SUBMODEA_BITSTRING_HPP
#define SUBMODEA_BITSTRING_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace submodea {

/// Fixed-length bit string over a ground set of n elements, packed into
/// 64-bit words. Bit i corresponds to ground element i.
class BitString {
 public:
  BitString() = default;

  explicit BitString(int n) : n_(n), words_((n + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("BitString: negative length");
  }

  int size() const { return n_; }

  bool test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i, bool value = true) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[static_cast<std::size_t>(i) >> 6] |= mask;
    else
      words_[static_cast<std::size_t>(i) >> 6] &= ~mask;
  }

  void flip(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63);
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }

  /// Calls fn(i) for every set bit i in increasing order.
  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int bit = std::countr_zero(w);
        fn(static_cast<int>(wi * 64) + bit);
        w &= w - 1;
      }
    }
  }

  /// Indices of set bits in increasing order.
  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  static BitString from_indices(int n, const std::vector<int>& indices) {
    BitString b(n);
    for (int i : indices) b.set(i);
    return b;
  }

  /// Low n bits of `mask` become the bit string (element i = bit i of mask).
  static BitString from_mask(int n, std::uint64_t mask) {
    if (n > 64) throw std::invalid_argument("BitString::from_mask: n > 64");
    BitString b(n);
    if (n > 0) b.words_[0] = n == 64 ? mask : (mask & ((std::uint64_t{1} << n) - 1));
    return b;
  }

  int hamming_distance(const BitString& other) const {
    if (other.n_ != n_) throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) d += std::popcount(words_[i] ^ other.words_[i]);
    return d;
  }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }
  friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }

 private:
  void check_index(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("BitString: index out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace submodea

#endif  // SUBMODEA_BITSTRING_HPP
