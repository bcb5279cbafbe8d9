#pragma once

#include <cstddef>
#include <functional>

namespace recordchar {

/// Runs body(i) for every i in [0, count), possibly on several threads.
/// Iterations must be independent; the first exception thrown by any
/// iteration is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace recordchar
