#pragma once

#include <string>
#include <vector>

#include "locale_lab/caps.hpp"
#include "locale_lab/lattice.hpp"
#include "locale_lab/space.hpp"

namespace lab {

/// Per-prime classification record. Every field is computed from its own
/// definition; the invariants tying them together are asserted by the tests.
struct PrimeDossier {
  int prime = -1;
  bool weakly_covered = false;
  bool covered = false;
  bool completely_prime = false;
  bool isolated_in_skula = false;
  bool isolated_in_upset_spectrum = false;
};

/// p cannot be written as a meet of primes without belonging to the family.
/// Closed form over the strictly-greater primes; cross-checked exhaustively
/// over prime subsets when they fit the cap.
bool is_weakly_covered(const FiniteLattice& L, int p, const Caps& caps = {});

/// p cannot be written as a meet of any family without belonging to it
/// (complete meet-irreducibility): the meet of everything strictly above p
/// stays strictly above p.
bool is_covered(const FiniteLattice& L, int p);

/// Essential primes of a (a must be a meet of primes): the primes p >= a
/// with p = (p -> a) -> a. Three characterizations are computed and must
/// agree: the double-implication fixpoint, the meet test on pt(up(a))
/// outside up(p), and membership in b(a).
Bitset essential_primes(const FiniteLattice& L, int a);

/// Absolutely essential primes of a: members of every prime family whose
/// meet is a. Computed as essential-and-weakly-covered, as the isolated
/// points of pt(up(a)), and (within the cap) by literal quantification over
/// prime families; the routes must agree.
Bitset absolutely_essential_primes(const FiniteLattice& L, int a,
                                   const Caps& caps = {});

std::vector<PrimeDossier> prime_dossiers(const FiniteLattice& L,
                                         const Caps& caps = {});

/// The isolated points of a space are dense. For the finite T0 spaces this
/// runs on, that is exactly "some discrete dense subspace exists"; the tests
/// hold it against the exhaustive subset search.
bool has_discrete_dense_subspace(const FiniteSpace& X);

enum class TheoremTag { kTd, kTotallySpatial, kScattered, kCoframe };

struct Verdict {
  std::string label;
  bool holds = false;
  bool computed = true;  // false when a cap forced a skip
  std::string witness;
};

/// One labeled verdict per characterization of a theorem; on finite frames
/// every suite must come out all-true with agreement, so any disagreement
/// is an implementation defect, never mathematics.
struct TheoremReport {
  TheoremTag tag;
  std::vector<Verdict> verdicts;
  bool agreement = false;        // all computed verdicts equal
  bool closed_form_only = false; // some verdict skipped by a cap

  bool all_true() const;
};

/// Six characterizations of pt(L) being T_D.
TheoremReport theorem_td(const FiniteLattice& L, const Caps& caps = {});
/// Eight characterizations of L being totally spatial.
TheoremReport theorem_totally_spatial(const FiniteLattice& L,
                                      const Caps& caps = {});
/// Eight characterizations of S(L) Boolean with L spatial.
TheoremReport theorem_scattered(const FiniteLattice& L, const Caps& caps = {});
/// For spatial frames that are also coframes: pt(L) T_D, all primes
/// completely prime, and pt(L) scattered are equivalent.
TheoremReport coframe_proposition(const FiniteLattice& L,
                                  const Caps& caps = {});

}  // namespace lab
