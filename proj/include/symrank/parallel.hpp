#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace symrank {

// Runs f(begin, end, chunk) over [0, count) split into `workers` contiguous chunks.
// Chunk boundaries depend only on (count, workers); callers reduce per-chunk results in chunk order.
template <typename F>
void parallel_chunks(std::size_t count, unsigned workers, F&& f) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    f(std::size_t{0}, count, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t b = count * w / workers, e = count * (w + 1) / workers;
    pool.emplace_back([&, b, e, w] {
      try {
        f(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// Exact integer reduction of g(i) over [0, count).
template <typename T, typename G>
T parallel_sum(std::size_t count, unsigned workers, G&& g) {
  std::vector<T> partial(std::max(1u, workers), T{0});
  parallel_chunks(count, workers, [&](std::size_t b, std::size_t e, unsigned w) {
    T acc{0};
    for (std::size_t i = b; i < e; ++i) acc += g(i);
    partial[w] = acc;
  });
  T total{0};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace symrank
