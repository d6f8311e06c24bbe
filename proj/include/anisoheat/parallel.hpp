#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace anisoheat {

/// Worker count: min(hardware, ANISOHEAT_THREADS) with a floor of 1.
int worker_count();

/// Runs fn(begin, end) over a partition of [0, n). Chunk boundaries depend
/// only on n, so reductions that combine per-chunk partials in chunk order
/// are deterministic for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

/// Deterministic parallel sum of term(i) for i in [0, n): fixed-size chunks,
/// partials combined in chunk order.
double parallel_sum(std::size_t n, const std::function<double(std::size_t)>& term);

}  // namespace anisoheat
