#pragma once

#include <cstdint>
#include <functional>

namespace lab {

/// Thread count from the given cap (0 = resolve from LOCALE_LAB_THREADS, or a
/// hardware default), clamped to [1, 64].
int configured_threads(int requested = 0);

/// Splits [0, total) into `threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) on each, joining before returning. Chunk
/// boundaries depend only on (total, threads), so per-chunk results merged in
/// chunk order are deterministic.
void run_chunked(uint64_t total, int threads,
                 const std::function<void(int, uint64_t, uint64_t)>& fn);

}  // namespace lab
