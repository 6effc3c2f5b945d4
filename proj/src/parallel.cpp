#include "lightspan/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace lightspan {

namespace {

int g_cap = 0;

int env_cap() {
  static int cached = [] {
    const char* env = std::getenv("LIGHTSPAN_THREADS");
    if (!env) return 0;
    int v = std::atoi(env);
    return v > 0 ? v : 0;
  }();
  return cached;
}

}  // namespace

int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (int cap = env_cap(); cap > 0 && cap < n) n = cap;
  if (g_cap > 0 && g_cap < n) n = g_cap;
  return n;
}

void set_worker_cap(int cap) { g_cap = cap < 0 ? 0 : cap; }

void parallel_for(int begin, int end, const std::function<void(int)>& body) {
  int count = end - begin;
  if (count <= 0) return;
  int workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<int> next(begin);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < end; i = next.fetch_add(1)) body(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace lightspan
