#pragma once

namespace lab {

/// Size caps shared across the library. Every exhaustive computation is
/// guarded by one of these; exceeding a cap raises CapExceeded, which callers
/// treat as "phase skipped", never as a failed law.
struct Caps {
  /// FiniteLattice builder refuses larger element counts.
  int max_elements = 4096;
  /// Subset-filter sublocale enumeration scans 2^n subsets up to this n.
  int max_enumeration = 18;
  /// Quantifications over subsets of primes (and the join-closure enumeration
  /// backend, whose output has 2^|primes| entries) run up to this many primes.
  int max_exhaustive_primes = 14;
  /// Random space generation and the exhaustive scattered check.
  int max_space_points = 12;
  /// Worker threads; 0 means LOCALE_LAB_THREADS or a hardware default.
  int threads = 0;
};

}  // namespace lab
