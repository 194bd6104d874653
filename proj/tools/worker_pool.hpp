#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace lieschur::cli {

/// Applies fn to every item on a bounded pool of threads. Results come back in input
/// order; the first failing item (in input order) has its exception rethrown.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn, std::size_t max_workers = 0)
    -> std::vector<std::invoke_result_t<Fn&, const T&>> {
  using R = std::invoke_result_t<Fn&, const T&>;
  std::vector<std::optional<R>> results(items.size());
  std::vector<std::exception_ptr> failures(items.size());
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < items.size();) {
      try {
        results[k].emplace(fn(items[k]));
      } catch (...) {
        failures[k] = std::current_exception();
      }
    }
  };

  std::size_t workers = max_workers ? max_workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, items.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }

  std::vector<R> out;
  out.reserve(items.size());
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (failures[k]) std::rethrow_exception(failures[k]);
    out.push_back(std::move(*results[k]));
  }
  return out;
}

}  // namespace lieschur::cli
