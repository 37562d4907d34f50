#pragma once

#include <cstddef>
#include <functional>

namespace circle_sobolev {

/// Worker count: CIRCLE_SOBOLEV_THREADS if set and positive, otherwise the
/// hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(begin, end) over contiguous blocks of [0, n). Each index is
/// visited exactly once, so callers that write per-index slots get results
/// that do not depend on the thread count.
void parallel_blocks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace circle_sobolev
