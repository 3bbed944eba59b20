#pragma once

#include <cstddef>
#include <functional>

namespace cocycle::par {

/// Worker cap: COCYCLE_LAB_THREADS when set to a positive integer, otherwise
/// (or when 0) the hardware concurrency.
std::size_t worker_count();

/// Run body(0) .. body(n-1), possibly on several threads in contiguous
/// chunks. Results must be written by index so the outcome is independent of
/// the schedule. Exceptions are rethrown on the calling thread.
void for_index(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cocycle::par
