#include "cominimal/runtime.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace cominimal {

int thread_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("COMINIMAL_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) return std::min(v, 64);
      return 1;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min<unsigned>(hw, 64));
  }();
  return cap;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
  if (n <= 0) return;
  int workers = std::min<std::int64_t>(thread_cap(), n);
  if (workers <= 1) {
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::future<void>> futs;
  futs.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    futs.push_back(std::async(std::launch::async, [&, w] {
      for (std::int64_t i = w; i < n; i += workers) fn(i);
    }));
  }
  for (auto& f : futs) f.get();
}

RunConfig& default_config() {
  static RunConfig cfg;
  return cfg;
}

}  // namespace cominimal
