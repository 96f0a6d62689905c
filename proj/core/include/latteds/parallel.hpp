#pragma once

#include <cstdint>
#include <functional>

namespace latteds {

// Thread cap: LATTEDS_THREADS if set, else hardware concurrency.
int max_threads();

// Runs fn(begin, end) over disjoint contiguous chunks of [0, n), possibly on
// several threads. Chunks never overlap, so elementwise writes are race-free
// and results are bit-identical regardless of the schedule.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace latteds
