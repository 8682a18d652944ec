#pragma once

#include <cstddef>
#include <functional>

namespace plasmonq {

/// Runs fn(0) .. fn(count - 1) across up to max_threads threads (0 picks
/// the hardware count). Indices partition statically, so any output
/// written to index-owned slots is identical to a sequential run.
void parallel_for(std::size_t count,
                  const std::function<void(std::size_t)>& fn,
                  unsigned max_threads = 0);

}  // namespace plasmonq
