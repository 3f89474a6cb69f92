#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ordlim {

// Runtime-sized bitset. Subsets of poset elements (down-sets in particular)
// are stored as one of these over the element indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

  static Bits full(std::size_t nbits) {
    Bits b(nbits);
    for (auto& w : b.w_) w = ~0ull;
    b.trim();
    return b;
  }

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= 1ull << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(1ull << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool none() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !none(); }

  Bits& operator|=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    r |= o;
    return r;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    r &= o;
    return r;
  }
  // Set difference.
  Bits minus(const Bits& o) const {
    assert(n_ == o.n_);
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= ~o.w_[k];
    return r;
  }

  bool is_subset_of(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const Bits& o) const = default;

  // Numeric comparison (element 0 least significant); combined with count()
  // this gives the canonical (cardinality, value) ordering of down-sets.
  bool less_by_value(const Bits& o) const {
    assert(n_ == o.n_);
    for (std::size_t k = w_.size(); k-- > 0;)
      if (w_[k] != o.w_[k]) return w_[k] < o.w_[k];
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t w = w_[k];
      while (w) {
        f(static_cast<std::size_t>(std::countr_zero(w)) + (k << 6));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (~0ull) >> (64 - (n_ & 63));
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return b.hash(); }
};

// (cardinality, numeric value) ordering used wherever down-sets need a
// deterministic index.
inline bool canonical_less(const Bits& a, const Bits& b) {
  std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.less_by_value(b);
}

}  // namespace ordlim
