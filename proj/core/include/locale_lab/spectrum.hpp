#pragma once

#include <cstdint>
#include <vector>

#include "locale_lab/caps.hpp"
#include "locale_lab/lattice.hpp"
#include "locale_lab/space.hpp"

namespace lab {

/// All meet-prime elements: p != top with x∧y <= p implying x <= p or y <= p.
Bitset primes(const FiniteLattice& L);
bool is_prime(const FiniteLattice& L, int p);

/// Closed form over the full family {x : x !<= p}; total on primes.
bool is_completely_prime(const FiniteLattice& L, int p);
/// Literal quantification over all 2^n subsets; the oracle for the closed
/// form on small lattices.
bool is_completely_prime_exhaustive(const FiniteLattice& L, int p,
                                    const Caps& caps = {});

/// The prime spectrum as a concrete space: points are the primes of the
/// source lattice, an element a opens the set {p prime : a !<= p}.
struct SpectrumSpace {
  FiniteSpace carrier;
  std::vector<int> prime_of_point;  // carrier point -> lattice element
  std::vector<uint64_t> sigma;      // lattice element -> open point mask
  const FiniteLattice* source = nullptr;

  int point_of_prime(int elem) const;
  uint64_t prime_mask_of(const Bitset& prime_elems) const;
  Bitset elems_of_point_mask(uint64_t mask) const;
};

SpectrumSpace spectrum_space(const FiniteLattice& L);

/// Every element is the meet of the primes above it.
bool is_spatial(const FiniteLattice& L);

/// Every irreducible closed set has exactly one generic point. Finite
/// irreducible closed sets are exactly the point closures, which is what the
/// scan below relies on; the test suite holds this against a brute-force
/// enumeration of all closed sets.
bool is_sober(const FiniteSpace& X);

/// Every point has a neighborhood U with U minus the point open.
bool is_td_space(const FiniteSpace& X);

/// Every nonempty subspace has an isolated point, checked exhaustively over
/// all subsets, and cross-checked against the finite closed form
/// (scattered <=> T0 for finite spaces).
bool is_scattered_space(const FiniteSpace& X, const Caps& caps = {});

/// The topology generated by the opens together with their complements.
FiniteSpace skula_space(const FiniteSpace& X);

bool is_discrete(const FiniteSpace& X);

}  // namespace lab
