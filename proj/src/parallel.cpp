#include "riskfield/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace riskfield {

int max_workers() {
  const char* env = std::getenv("RISKFIELD_THREADS");
  int requested = 1;
  if (env != nullptr) {
    requested = std::atoi(env);
    if (requested < 1) requested = 1;
  }
  const int hw = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(requested, 1, std::max(hw, 1));
}

void for_row_blocks(int rows, int workers, const std::function<void(int, int)>& fn) {
  workers = std::clamp(workers, 1, std::max(rows, 1));
  if (workers == 1 || rows <= 1) {
    fn(0, rows);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<size_t>(workers) - 1);
  const int base = rows / workers;
  const int extra = rows % workers;
  int begin = 0;
  for (int w = 0; w < workers; ++w) {
    const int size = base + (w < extra ? 1 : 0);
    const int end = begin + size;
    if (w == workers - 1) {
      fn(begin, end);
    } else {
      threads.emplace_back(fn, begin, end);
    }
    begin = end;
  }
  for (std::thread& t : threads) t.join();
}

}  // namespace riskfield
