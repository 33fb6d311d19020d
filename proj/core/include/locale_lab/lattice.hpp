#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "locale_lab/bitset.hpp"
#include "locale_lab/caps.hpp"

namespace lab {

/// A finite bounded distributive lattice (a finite frame) over element
/// indices 0..n-1, with the order relation and the meet, join and Heyting
/// implication tables precomputed at build time.
///
/// Immutable after construction; safe to share across threads.
class FiniteLattice {
 public:
  /// Builds from the order relation, given as leq_rows[a] = {b : a <= b}.
  /// Validates that the relation is a partial order, that every pair has a
  /// meet and a join, and that the lattice is distributive (reporting a
  /// witnessing triple when it is not). The Heyting adjunction of the
  /// computed implication table is checked before returning.
  static FiniteLattice build(std::vector<Bitset> leq_rows,
                             const Caps& caps = {});

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  bool leq(int a, int b) const { return up_[a].test(b); }
  int meet(int a, int b) const { return inv_[meet_[idx(a, b)]]; }
  int join(int a, int b) const { return inv_[join_[idx(a, b)]]; }
  /// Greatest c with meet(c, a) <= b.
  int heyting(int a, int b) const { return inv_[heyting_[idx(a, b)]]; }

  /// {x : a <= x}
  const Bitset& upset(int a) const { return up_[a]; }
  /// {x : x <= a}
  const Bitset& downset(int a) const { return down_[a]; }

  /// Meet of a set of elements; the empty meet is top.
  int big_meet(const Bitset& elems) const;
  int big_meet(std::initializer_list<int> elems) const;
  /// Join of a set of elements; the empty join is bottom.
  int big_join(const Bitset& elems) const;
  int big_join(std::initializer_list<int> elems) const;

  Bitset universe_set() const { return Bitset::full(n_); }

  std::span<const int> lower_covers(int a) const { return covers_down_[a]; }
  std::span<const int> upper_covers(int a) const { return covers_up_[a]; }

 private:
  FiniteLattice() = default;
  size_t idx(int a, int b) const {
    return static_cast<size_t>(pos_[a]) * n_ + pos_[b];
  }

  int n_ = 0;
  int bottom_ = 0, top_ = 0;
  std::vector<Bitset> up_, down_;  // caller labels
  // Tables are stored under an internal relabeling in which index order is a
  // linear extension of the lattice order; pos_/inv_ translate at the API.
  std::vector<int32_t> meet_, join_, heyting_;
  std::vector<int32_t> pos_, inv_;
  std::vector<std::vector<int>> covers_down_, covers_up_;
};

/// The n-element chain 0 < 1 < ... < n-1.
FiniteLattice chain_lattice(int n, const Caps& caps = {});

/// The Boolean lattice with the given number of atoms (element i is the
/// bitmask i of atoms, ordered by mask inclusion).
FiniteLattice boolean_lattice(int atoms, const Caps& caps = {});

}  // namespace lab
