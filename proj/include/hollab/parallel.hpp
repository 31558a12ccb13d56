#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace hollab {

/// Evaluates fn(0), fn(1), ... and returns the engaged result with the
/// smallest index, independent of the thread count. Workers stop claiming
/// indices beyond the best one found so far.
template <class R, class F>
std::optional<R> parallel_first(std::size_t n, unsigned threads, F&& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (auto r = fn(i))
        return r;
    return std::nullopt;
  }
  std::vector<std::optional<R>> results(n);
  std::atomic<std::size_t> next{0}, best{n};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n && i < best.load(); i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        best = 0;
        return;
      }
      if (results[i]) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  for (std::size_t i = 0; i < n; ++i)
    if (results[i])
      return results[i];
  return std::nullopt;
}

/// Evaluates fn(i) for every i, results in index order.
template <class R, class F>
std::vector<R> parallel_map(std::size_t n, unsigned threads, F&& fn) {
  std::vector<R> results(n);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      results[i] = fn(i);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = n;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(threads, n); ++t)
    pool.emplace_back(worker);
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
  return results;
}

} // namespace hollab
