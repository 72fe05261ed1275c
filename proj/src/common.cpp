#include "bergman/common.hpp"

#include <atomic>

namespace bergman {

double chunked_sum(std::size_t n, const std::function<double(std::size_t, std::size_t)>& chunk_sum,
                   std::size_t chunk) {
  if (n == 0) return 0.0;
  std::size_t n_chunks = (n + chunk - 1) / chunk;
  std::vector<double> partial(n_chunks, 0.0);
  auto work = [&](std::size_t c_begin, std::size_t c_end) {
    for (std::size_t c = c_begin; c < c_end; ++c) {
      std::size_t lo = c * chunk;
      std::size_t hi = std::min(n, lo + chunk);
      partial[c] = chunk_sum(lo, hi);
    }
  };
  int workers = hardware_threads();
  if (workers <= 1 || n_chunks <= 1) {
    work(0, n_chunks);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (int t = 0; t < workers; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t c = next.fetch_add(1);
          if (c >= n_chunks) break;
          work(c, c + 1);
        }
      });
    for (auto& th : pool) th.join();
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

void parallel_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                     std::size_t chunk) {
  if (n == 0) return;
  std::size_t n_chunks = (n + chunk - 1) / chunk;
  int workers = hardware_threads();
  if (workers <= 1 || n_chunks <= 1) {
    fn(0, n);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        std::size_t c = next.fetch_add(1);
        if (c >= n_chunks) break;
        std::size_t lo = c * chunk;
        fn(lo, std::min(n, lo + chunk));
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace bergman
