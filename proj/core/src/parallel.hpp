#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace collabnet::detail {

/// Splits [0, count) into fixed blocks of `block` items and runs
/// fn(block_index, begin, end) for each, on up to `threads` workers. Block
/// boundaries do not depend on the worker count, so per-block partial
/// results reduced in block order are identical for any thread count.
template <typename Fn>
void for_each_block(std::size_t count, std::size_t block, unsigned threads,
                    Fn&& fn) {
  const std::size_t blocks = (count + block - 1) / block;
  auto run_block = [&](std::size_t b) {
    fn(b, b * block, std::min(count, (b + 1) * block));
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(threads, 1u), blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t b; (b = next.fetch_add(1)) < blocks;) run_block(b);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace collabnet::detail
