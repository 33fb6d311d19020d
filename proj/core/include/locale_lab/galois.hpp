#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "locale_lab/caps.hpp"
#include "locale_lab/sublocale.hpp"

namespace lab {

/// Witness recording: keep only the first failing input per law (bounds
/// output size), or collect every failing input.
enum class WitnessPolicy { kFirstOnly, kCollectAll };

struct LawCheck {
  std::string law;
  bool ok = true;
  std::vector<std::string> witnesses;  // empty when ok

  const std::string& first_witness() const { return witnesses.front(); }
};

/// Verdicts for a family of laws, with a witness recorded iff a law failed.
struct DiagramReport {
  std::string name;
  std::vector<LawCheck> laws;

  bool all_ok() const;
  const LawCheck* find(std::string_view law) const;
};

/// The meet-closure M(Y) of a set of primes: all meets of subsets of Y,
/// including the empty meet. Always a sublocale. The overload taking the
/// lattice primes skips recomputing them for the membership check.
Sublocale meet_closure(const FiniteLattice& L, const Bitset& prime_subset);
Sublocale meet_closure(const FiniteLattice& L, const Bitset& prime_subset,
                       const Bitset& lattice_primes);

/// Largest spatial sublocale inside S. Computed as M(pt(S)) and again as the
/// join of the b(p) over p in pt(S); the two routes must agree.
Sublocale spatialization(const Sublocale& s);
Sublocale spatialization(const Sublocale& s, const Bitset& lattice_primes);

/// Smallest sober subspace of pt(L) containing Y, as pt(M(Y)). Within the
/// exhaustive cap it is cross-checked against the intersection of all sober
/// supersets of Y in the spectrum.
Bitset sobrification(const FiniteLattice& L, const Bitset& prime_subset,
                     const Caps& caps = {});

/// M(Y) ⊆ S  <=>  Y ⊆ pt(S), over all sublocales and prime subsets.
DiagramReport check_adjunction(const FiniteLattice& L, const Caps& caps = {},
                               WitnessPolicy policy = WitnessPolicy::kFirstOnly);

/// Spatialization is contractive, idempotent, monotone, and preserves binary
/// joins, over all sublocales.
DiagramReport check_conucleus(const FiniteLattice& L, const Caps& caps = {},
                              WitnessPolicy policy = WitnessPolicy::kFirstOnly);

/// The square relating S(L), P(pt(L)), spatial sublocales and sober
/// subspaces: fixpoint characterizations, pt restricted to spatial
/// sublocales an order isomorphism onto sober subspaces with inverse M,
/// pt(sp(S)) = pt(S), and sp[S(L)] = the join closure of the two-element
/// sublocales.
DiagramReport check_main_diagram(const FiniteLattice& L, const Caps& caps = {},
                                 WitnessPolicy policy = WitnessPolicy::kFirstOnly);

/// The prime spectrum of S(L)^op is the Skula space of pt(L), witnessed by
/// the homeomorphism p -> b(p), checked point by point and open by open.
DiagramReport assembly_spectrum_vs_skula(const FiniteLattice& L,
                                         const Caps& caps = {});

}  // namespace lab
