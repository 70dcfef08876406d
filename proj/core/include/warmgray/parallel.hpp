#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace warmgray {

/// 0 means "all hardware threads"; the result is always >= 1.
inline unsigned resolve_threads(unsigned requested) noexcept {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, rows) into contiguous blocks and calls fn(begin, end) for each
/// block on its own thread. fn must only write state owned by its block.
template <typename Fn>
void for_each_row_block(std::size_t rows, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), rows);
  if (workers <= 1) {
    if (rows > 0) fn(std::size_t{0}, rows);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = rows / workers;
  const std::size_t extra = rows % workers;
  std::size_t begin = 0;
  std::size_t first_end = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t end = begin + chunk + (w < extra ? 1 : 0);
    if (w == 0) {
      first_end = end;
    } else {
      pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    begin = end;
  }
  fn(std::size_t{0}, first_end);
}

}  // namespace warmgray
