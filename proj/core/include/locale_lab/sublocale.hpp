#pragma once

#include <span>
#include <string>
#include <vector>

#include "locale_lab/bitset.hpp"
#include "locale_lab/caps.hpp"
#include "locale_lab/lattice.hpp"

namespace lab {

/// A sublocale of a finite frame, held concretely as its member set: closed
/// under all meets (so it contains top, the empty meet) and under x -> s for
/// every lattice element x and member s.
///
/// Holds a pointer to its source lattice, which must outlive it; operations
/// on sublocales of different lattice objects throw MixedSources.
class Sublocale {
 public:
  Sublocale(const FiniteLattice& lattice, Bitset members);

  const FiniteLattice& lattice() const { return *lattice_; }
  const Bitset& members() const { return members_; }
  bool contains(int e) const { return members_.test(e); }
  int member_count() const { return members_.count(); }

  bool operator==(const Sublocale& o) const {
    return lattice_ == o.lattice_ && members_ == o.members_;
  }
  bool subset_of(const Sublocale& o) const;
  /// Canonical ordering (numeric on member sets) used for sorted output.
  bool numeric_less(const Sublocale& o) const;

  std::string to_string() const { return members_.to_string(); }

 private:
  const FiniteLattice* lattice_;
  Bitset members_;
};

/// Both closure laws, checked literally.
bool is_sublocale(const FiniteLattice& L, const Bitset& members);

/// The closed sublocale of a: the upset of a.
Sublocale closed_sublocale(const FiniteLattice& L, int a);
/// The open sublocale of a: {a -> x : x in L}.
Sublocale open_sublocale(const FiniteLattice& L, int a);
/// The smallest sublocale containing x: {y -> x : y in L}. Always a Boolean
/// algebra with bottom x.
Sublocale boolean_sublocale(const FiniteLattice& L, int x);
/// {top}: the bottom element of S(L).
Sublocale void_sublocale(const FiniteLattice& L);
/// L itself: the top element of S(L).
Sublocale full_sublocale(const FiniteLattice& L);

/// Join in S(L): the meet-closure of the member union.
Sublocale sublocale_join(const Sublocale& s, const Sublocale& t);
Sublocale sublocale_join(const FiniteLattice& L,
                         std::span<const Sublocale> parts);
/// Meet in S(L): member intersection.
Sublocale sublocale_meet(const Sublocale& s, const Sublocale& t);

/// primes(L) ∩ S, cross-checked against primality computed inside S with its
/// inherited meet structure. The second form takes the precomputed primes of
/// the source lattice and skips recomputing them.
Bitset points_of_sublocale(const Sublocale& s);
Bitset points_of_sublocale(const Sublocale& s, const Bitset& lattice_primes);

/// All sublocales with exactly two members, i.e. the {top, p} for p prime.
std::vector<Sublocale> two_element_sublocales(const FiniteLattice& L);

enum class EnumerationBackend {
  /// Pick SubsetFilter when the lattice fits its cap, else JoinClosure.
  kAuto,
  /// Filter all 2^n subsets with early-exit closure checks. The oracle.
  kSubsetFilter,
  /// Close the Boolean sublocales b(x) under binary joins. Reaches every
  /// sublocale since each one is the join of the b(x) over its members.
  kJoinClosure,
};

/// Every sublocale of L, sorted canonically. The two backends must agree
/// wherever both apply; tests and the acceptance suite hold them against
/// each other.
std::vector<Sublocale> enumerate_sublocales(
    const FiniteLattice& L, const Caps& caps = {},
    EnumerationBackend backend = EnumerationBackend::kAuto);

/// S(L) packaged as a finite lattice in the dual (reverse inclusion) order,
/// so that frame validation of `dual` certifies that S(L) is a coframe.
/// Element i of `dual` is sublocales[i].
struct SublocaleAssembly {
  std::vector<Sublocale> sublocales;
  FiniteLattice dual;

  int index_of(const Bitset& members) const;
};

SublocaleAssembly sublocale_assembly(
    const FiniteLattice& L, const Caps& caps = {},
    EnumerationBackend backend = EnumerationBackend::kAuto);

}  // namespace lab
