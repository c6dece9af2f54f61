// Row-partitioned parallel evaluation helper. Worker count is capped by the
// RISKFIELD_THREADS environment variable (default 1); results never depend on
// the partitioning because all per-cell work is pure.
#ifndef RISKFIELD_PARALLEL_HPP_
#define RISKFIELD_PARALLEL_HPP_

#include <functional>

namespace riskfield {

// Worker cap from RISKFIELD_THREADS, clamped to [1, hardware_concurrency].
int max_workers();

// Invokes fn(row_begin, row_end) over a partition of [0, rows) on up to
// `workers` threads (the calling thread counts as one).
void for_row_blocks(int rows, int workers, const std::function<void(int, int)>& fn);

}  // namespace riskfield

#endif  // RISKFIELD_PARALLEL_HPP_
