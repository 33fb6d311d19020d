#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locale_lab/caps.hpp"
#include "locale_lab/lattice.hpp"

namespace lab {

/// A finite topological space: named points and an explicit family of open
/// sets, stored as point masks sorted numerically. At most 64 points.
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<uint64_t> opens;  // sorted, unique

  int point_count() const { return static_cast<int>(points.size()); }
  uint64_t full_mask() const {
    int n = point_count();
    return n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  }
  bool has_open(uint64_t mask) const;

  /// Checks the topology axioms: empty and full sets present, opens closed
  /// under binary union and intersection. Throws NotATopology with a witness.
  void validate() const;
};

/// Smallest closed superset of the given point set.
uint64_t closure_of(const FiniteSpace& X, uint64_t set);
/// Smallest open neighborhood of a point (finite spaces always have one).
uint64_t min_nbhd(const FiniteSpace& X, int point);
/// The subspace on the given points, with the induced topology.
FiniteSpace subspace(const FiniteSpace& X, uint64_t keep);
/// Distinct points are separated by some open set.
bool is_t0(const FiniteSpace& X);

/// A frame of opens together with the element <-> open set labeling.
struct FrameOfOpens {
  FiniteLattice lattice;
  std::vector<uint64_t> open_of_element;  // indexed by lattice element
  FiniteSpace space;

  int element_of_open(uint64_t mask) const;
  /// Readable label of an element, e.g. "{x,y}".
  std::string element_label(int e) const;
};

/// The lattice of open sets ordered by inclusion. Meets and joins are
/// checked to agree with intersections and unions.
FrameOfOpens frame_from_space(const FiniteSpace& X, const Caps& caps = {});

/// A finite poset over named points, as leq_rows[a] = {b : a <= b}.
struct Poset {
  std::vector<std::string> names;
  std::vector<Bitset> leq_rows;
};

/// The Alexandroff space of a poset: opens are the up-closed subsets.
FiniteSpace alexandroff_space(const Poset& P);

/// The frame of up-sets of a poset, labeled by point masks.
FrameOfOpens frame_from_poset_upsets(const Poset& P, const Caps& caps = {});

/// Deterministic random space: seeds a subbase of random point sets (each
/// membership drawn with the given probability) and closes it under unions
/// and intersections. Identical arguments give identical spaces.
FiniteSpace random_space(int num_points, uint64_t seed, double density,
                         const Caps& caps = {});

/// The topology generated by a subbase: closes under binary unions and
/// intersections. Throws CapExceeded when the result outgrows max_size.
std::vector<uint64_t> generate_topology(std::vector<uint64_t> subbase,
                                        size_t max_size);

}  // namespace lab
