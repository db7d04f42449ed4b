#include "tractlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace tractlab {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TRACTLAB_JOBS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  return 1;
}

void parallel_chunks(std::size_t n, int jobs,
                     const std::function<void(int, std::size_t, std::size_t)>& work) {
  int chunks = std::max(1, jobs);
  if (std::size_t(chunks) > n) chunks = int(std::max<std::size_t>(n, 1));
  if (chunks == 1) {
    work(0, 0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(std::size_t(chunks));
  const std::size_t base = n / std::size_t(chunks);
  const std::size_t extra = n % std::size_t(chunks);
  std::size_t lo = 0;
  for (int c = 0; c < chunks; ++c) {
    std::size_t hi = lo + base + (std::size_t(c) < extra ? 1 : 0);
    threads.emplace_back([&work, c, lo, hi] { work(c, lo, hi); });
    lo = hi;
  }
  for (auto& t : threads) t.join();
}

}  // namespace tractlab
