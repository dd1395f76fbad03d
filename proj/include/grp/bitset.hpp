#ifndef GRP_BITSET_HPP
#define GRP_BITSET_HPP

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grp {

/// Fixed-size dynamic bitset used for element-ordinal sets (subgroup members)
/// and index sets. Two bitsets compare equal only if they have the same size.
class DynBitset {
 public:
  DynBitset() = default;

  explicit DynBitset(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool is_subset_of(const DynBitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const DynBitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  DynBitset operator&(const DynBitset& other) const {
    assert(size_ == other.size_);
    DynBitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] & other.words_[i];
    return r;
  }

  DynBitset operator|(const DynBitset& other) const {
    assert(size_ == other.size_);
    DynBitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      r.words_[i] = words_[i] | other.words_[i];
    return r;
  }

  bool operator==(const DynBitset& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }

  /// Visit set bits in ascending order.
  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        unsigned b = std::countr_zero(w);
        fn(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  /// Index of the lowest set bit; size() when empty.
  std::size_t first() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
      if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
    return size_;
  }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ size_);
  }

  /// Lexicographic comparison of the ascending index sequences; used for the
  /// canonical ordering of subgroups of equal order.
  bool lex_less(const DynBitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t diff = words_[wi] ^ other.words_[wi];
      if (diff) {
        // The lowest differing index decides: whichever set contains it
        // starts with a smaller index sequence.
        std::uint64_t low = diff & (~diff + 1);
        return words_[wi] & low;
      }
    }
    return false;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct DynBitsetHash {
  std::size_t operator()(const DynBitset& b) const { return b.hash(); }
};

}  // namespace grp

#endif  // GRP_BITSET_HPP
