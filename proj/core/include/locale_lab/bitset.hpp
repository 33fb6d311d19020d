#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace lab {

/// Fixed-universe bitset used for element sets, sublocale members and open
/// sets over lattice indices. Binary operations require both operands to be
/// over the same universe.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int universe);
  static Bitset full(int universe);
  static Bitset of(int universe, std::initializer_list<int> bits);

  int universe() const { return n_; }
  bool test(int i) const;
  void set(int i);
  void reset(int i);

  bool any() const;
  bool none() const { return !any(); }
  int count() const;

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset minus(const Bitset& o) const;
  Bitset complement() const;
  friend Bitset operator&(Bitset a, const Bitset& b) {
    a &= b;
    return a;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) {
    a |= b;
    return a;
  }

  bool subset_of(const Bitset& o) const;
  bool intersects(const Bitset& o) const;

  int first() const;            // -1 if empty
  int last() const;             // -1 if empty
  int next_after(int i) const;  // -1 at end

  bool operator==(const Bitset& o) const = default;
  /// Orders sets by their value read as a binary number; gives the canonical
  /// enumeration order used everywhere a sorted list of sets is emitted.
  bool numeric_less(const Bitset& o) const;

  size_t hash() const;
  std::string to_string() const;  // "{0,2,5}"

  /// Calls f(i) for every member i in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < w_.size(); ++w) {
      uint64_t bits = w_[w];
      while (bits != 0) {
        int i = static_cast<int>(w * 64) + std::countr_zero(bits);
        f(i);
        bits &= bits - 1;
      }
    }
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace lab
