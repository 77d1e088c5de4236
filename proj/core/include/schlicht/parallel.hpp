#pragma once

#include <cstddef>
#include <functional>

namespace schlicht {

/// Caps the worker count used by scan kernels. 0 restores the default
/// (hardware concurrency). Results never depend on this value: workers only
/// fill disjoint slots and every reduction runs sequentially afterwards.
void set_max_threads(unsigned count) noexcept;
unsigned max_threads() noexcept;

/// Calls body(i) for i in [0, count), spread over up to max_threads() workers.
/// The first exception thrown by any worker is rethrown on the caller.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace schlicht
