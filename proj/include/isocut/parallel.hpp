#pragma once

#include <exception>
#include <mutex>

namespace isocut {

/// Serial is the reference path; parallel runs independent flow instances on
/// OpenMP threads. Both produce identical results and identical meters.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). Exceptions thrown by a worker are
/// rethrown on the calling thread (the first one captured wins).
template <typename Body>
void for_each_index(Execution exec, int count, Body&& body) {
  if (exec == Execution::serial || count < 2) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace isocut
