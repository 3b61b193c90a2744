#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace apurity {

/// Applies fn to every input on a small thread pool and returns results in input order.
/// The first exception thrown by any task is rethrown on the caller's thread.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& inputs, Fn fn) -> std::vector<std::invoke_result_t<Fn, const T&>> {
  using R = std::invoke_result_t<Fn, const T&>;
  std::vector<std::optional<R>> slots(inputs.size());
  const std::size_t workers =
      std::min<std::size_t>(inputs.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      try {
        slots[i].emplace(fn(inputs[i]));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = inputs.size();
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (error) std::rethrow_exception(error);

  std::vector<R> out;
  out.reserve(inputs.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

}  // namespace apurity
