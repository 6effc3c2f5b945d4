#pragma once

#include <functional>

namespace lightspan {

/// Number of workers used by measurement loops: hardware concurrency capped
/// by the LIGHTSPAN_THREADS environment variable and by set_worker_cap().
int worker_count();

/// Caps the worker count for this process; 0 removes the cap.
void set_worker_cap(int cap);

/// Runs body(i) for i in [begin, end). Iterations must not share mutable
/// state; results are deterministic regardless of scheduling.
void parallel_for(int begin, int end, const std::function<void(int)>& body);

}  // namespace lightspan
