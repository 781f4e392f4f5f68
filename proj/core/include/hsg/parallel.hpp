#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace hsg {

// Worker count from HSG_THREADS (default 1, clamped to [1, 64]).
int thread_count();

// Calls body(i) for i in [0, n); with more than one worker, indices are
// split into contiguous blocks. Exceptions are rethrown on the caller's thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Maps each index and folds the results per worker, then across workers in
// worker order. fold must be associative.
template <class T, class Map, class Fold>
T parallel_reduce(std::size_t n, T init, Map map, Fold fold) {
  int workers = thread_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) init = fold(std::move(init), map(i));
    return init;
  }
  std::size_t blocks = std::min<std::size_t>(std::size_t(workers), n);
  std::vector<T> partial(blocks, init);
  std::vector<char> used(blocks, 0);
  parallel_for(blocks, [&](std::size_t b) {
    std::size_t lo = n * b / blocks, hi = n * (b + 1) / blocks;
    for (std::size_t i = lo; i < hi; ++i) {
      partial[b] = used[b] ? fold(std::move(partial[b]), map(i)) : map(i);
      used[b] = 1;
    }
  });
  for (std::size_t b = 0; b < blocks; ++b)
    if (used[b]) init = fold(std::move(init), std::move(partial[b]));
  return init;
}

}  // namespace hsg
