#include "commvar/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace commvar {

unsigned default_workers() {
  if (const char* env = std::getenv("COMMVAR_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task, unsigned workers) {
  if (workers == 0) workers = default_workers();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned count = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace commvar
