#pragma once

#include <cstddef>
#include <functional>

namespace barbell {

// Worker count: BARBELL_THREADS if set to a positive integer, else hardware concurrency.
std::size_t worker_count();

// Calls body(i) for i in [0, count) across worker_count() threads. The first
// exception thrown by any call is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace barbell
