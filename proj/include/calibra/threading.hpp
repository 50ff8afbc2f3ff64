#pragma once

#include <cstddef>
#include <functional>

namespace calibra {

/// Worker count: CALIBRA_THREADS if set (>=1), else hardware concurrency.
int worker_count();

/// Runs fn(i) for i in [0, n). Tasks must be independent; any result that
/// feeds a reduction must be stored per-index so the caller can reduce in
/// index order. That keeps every run bitwise identical to the single-thread
/// schedule regardless of worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace calibra
