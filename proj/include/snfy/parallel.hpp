#ifndef SNFY_PARALLEL_HPP
#define SNFY_PARALLEL_HPP

#include <functional>

namespace snfy {

/// Thread count from SNFY_THREADS when set, otherwise hardware concurrency.
int default_thread_count();

/// Runs fn(i) for i in [0, count) on up to `threads` worker threads.
/// Work is handed out by an atomic counter; fn must be safe to run
/// concurrently for distinct indices. threads <= 1 runs inline.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace snfy

#endif
