#pragma once

#include <exception>
#include <vector>

#include <omp.h>

namespace coxlink {

enum class Execution { Serial, Parallel };

/// Set the OpenMP thread count used by Execution::Parallel; 0 keeps the default.
inline void set_parallelism(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

inline int available_threads() { return omp_get_max_threads(); }

/// out[i] = f(i) for i < count. Results land at their index, so the output is
/// identical for both execution modes; the first exception (by index) is rethrown.
template <class F>
auto parallel_map(std::size_t count, F&& f, Execution ex) -> std::vector<decltype(f(std::size_t{}))> {
  using R = decltype(f(std::size_t{}));
  std::vector<R> out(count);
  if (ex == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Pairwise tree reduction; each round combines neighbours in parallel.
template <class T, class Op>
T tree_reduce(std::vector<T> items, T identity, Op op, Execution ex) {
  if (items.empty()) return identity;
  while (items.size() > 1) {
    const std::size_t half = items.size() / 2;
    auto merged = parallel_map(
        half, [&](std::size_t i) { return op(items[2 * i], items[2 * i + 1]); }, ex);
    if (items.size() % 2) merged.push_back(std::move(items.back()));
    items = std::move(merged);
  }
  return std::move(items.front());
}

}  // namespace coxlink
