#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <vector>

namespace geocrystal {

/// Every data-parallel kernel has a serial reference path kept for testing;
/// both paths must produce identical results.
enum class Execution { serial, parallel };

/// Runs body(i) for i in [0, count). The parallel path uses OpenMP with
/// dynamic scheduling; exceptions are captured per index and the one with the
/// lowest index is rethrown, so both paths fail identically.
template <class Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Maps each index to a vector of results and concatenates them in index
/// order, so the output does not depend on scheduling.
template <class T, class Body>
std::vector<T> gather_indexed(std::size_t count, Execution exec, Body&& body) {
  std::vector<std::vector<T>> slots(count);
  for_each_index(count, exec, [&](std::size_t i) { slots[i] = body(i); });
  std::vector<T> out;
  for (auto& s : slots)
    for (auto& item : s) out.push_back(std::move(item));
  return out;
}

}  // namespace geocrystal
