#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcx {

// Thread count used by sweeps and panel quadrature; 0 restores the runtime default.
void set_worker_count(int n);
int worker_count();
bool parallel_enabled();

// Runs body(0..count-1) on the worker pool.  If any call throws, the exception
// of the lowest failing index is rethrown after all workers finish.
void parallel_for_ordered(std::size_t count, const std::function<void(std::size_t)>& body);

// Same as parallel_for_ordered but always on the calling thread.
void serial_for(std::size_t count, const std::function<void(std::size_t)>& body);

template <class T>
std::vector<T> ordered_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(count);
    parallel_for_ordered(count, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace qcx
