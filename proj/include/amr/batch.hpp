#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace amr {

/// Worker count for a --jobs value: 0 means one per hardware thread.
std::size_t resolve_jobs(std::size_t requested);

/// Expands each argument: a directory yields its *.json and *.xml files, a
/// name containing *, ? or [ is matched against its directory's entries,
/// and anything else passes through. Output is sorted and deduplicated; an
/// unmatched pattern contributes nothing.
std::vector<std::filesystem::path> expand_inputs(const std::vector<std::string>& args);

/// Result of one work item: a value, or the message of the exception it threw.
template <typename T>
struct Outcome {
  std::optional<T> value;
  std::string error;
};

/// Applies fn to 0..count-1 on up to `jobs` threads. Results keep index
/// order, so output does not depend on scheduling. Exceptions derived from
/// std::exception are captured per item.
template <typename T>
std::vector<Outcome<T>> parallel_map(std::size_t count, std::size_t jobs, const std::function<T(std::size_t)>& fn) {
  std::vector<Outcome<T>> results(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i].value.emplace(fn(i));
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };
  const std::size_t threads = std::min(resolve_jobs(jobs), count);
  if (threads <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();  // joins
  return results;
}

}  // namespace amr
