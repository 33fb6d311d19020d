#pragma once

#include <vector>

#include "locale_lab/lattice.hpp"
#include "locale_lab/space.hpp"

namespace lab::testing {

inline FiniteSpace sierpinski() {
  return FiniteSpace{{"x", "y"}, {0b00, 0b10, 0b11}};
}

inline FiniteSpace indiscrete(int k) {
  FiniteSpace X;
  for (int i = 0; i < k; ++i) X.points.push_back("x" + std::to_string(i));
  X.opens = {0, X.full_mask()};
  if (k == 0) X.opens = {0};
  return X;
}

inline FiniteSpace discrete(int k) {
  FiniteSpace X;
  for (int i = 0; i < k; ++i) X.points.push_back("x" + std::to_string(i));
  for (uint64_t m = 0; m < (uint64_t{1} << k); ++m) X.opens.push_back(m);
  return X;
}

inline FiniteSpace empty_space() { return FiniteSpace{{}, {0}}; }

/// A varied pool of small frames: chains, Boolean lattices, frames of opens
/// of random spaces.
inline std::vector<FiniteLattice> small_frames(int random_count = 10,
                                               int max_points = 4,
                                               uint64_t seed = 17) {
  std::vector<FiniteLattice> out;
  for (int n : {1, 2, 3, 4, 5}) out.push_back(chain_lattice(n));
  for (int k : {1, 2, 3}) out.push_back(boolean_lattice(k));
  for (int t = 0; t < random_count; ++t) {
    int points = 1 + static_cast<int>((seed + t) % max_points);
    double density = 0.3 + 0.1 * (t % 5);
    out.push_back(
        frame_from_space(random_space(points, seed + t, density)).lattice);
  }
  return out;
}

/// Infimum recomputed from scratch: the greatest common lower bound found by
/// scanning, independent of the builder's tables.
inline int brute_meet(const FiniteLattice& L, int a, int b) {
  int best = -1;
  for (int c = 0; c < L.size(); ++c) {
    if (!L.leq(c, a) || !L.leq(c, b)) continue;
    if (best < 0 || L.leq(best, c)) best = c;
  }
  // Verify the candidate really bounds every common lower bound.
  for (int c = 0; c < L.size(); ++c)
    if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, best)) return -1;
  return best;
}

inline int brute_join(const FiniteLattice& L, int a, int b) {
  int best = -1;
  for (int c = 0; c < L.size(); ++c) {
    if (!L.leq(a, c) || !L.leq(b, c)) continue;
    if (best < 0 || L.leq(c, best)) best = c;
  }
  for (int c = 0; c < L.size(); ++c)
    if (L.leq(a, c) && L.leq(b, c) && !L.leq(best, c)) return -1;
  return best;
}

}  // namespace lab::testing
