#include "circulant/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace circulant {

int max_threads() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("CIRC_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) hw = std::min<long>(hw, cap);
  }
  return hw;
}

void parallel_chunks(std::size_t count, std::size_t min_grain,
                     const std::function<void(std::size_t, std::size_t)>& f) {
  if (count == 0) return;
  if (min_grain == 0) min_grain = 1;
  std::size_t workers = static_cast<std::size_t>(max_threads());
  workers = std::min(workers, (count + min_grain - 1) / min_grain);
  if (workers <= 1) {
    f(0, count);
    return;
  }
  std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, w, lo, hi] {
      try {
        f(lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace circulant
