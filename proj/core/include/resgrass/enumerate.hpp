#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <span>
#include <thread>
#include <vector>

#include "resgrass/scalars.hpp"

namespace resgrass {

/// Number of points of P^{dim-1}(F_q), or UINT64_MAX on overflow.
std::uint64_t projective_count(std::uint32_t q, std::size_t dim);

/// The index-th normalized vector (first nonzero entry 1) of F_q^dim.
void projective_point(std::uint32_t q, std::size_t dim, std::uint64_t index, std::span<Coeff> out);

/// Enumeration cap: RESGRASS_BUDGET if set, else 10^7.
std::uint64_t default_budget();

/// Throws BudgetError when count exceeds budget.
void require_budget(std::uint64_t count, std::uint64_t budget, const char* what);

/// Runs fn(begin, end, worker) over [0, count) split across hardware threads.
template <class Fn>
void parallel_chunks(std::uint64_t count, Fn&& fn) {
  const std::uint64_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::clamp<std::uint64_t>(count / 4096, 1, hw);
  if (workers == 1) {
    fn(std::uint64_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    const std::uint64_t step = (count + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(count, w * step), end = std::min(count, begin + step);
      threads.emplace_back([&fn, &errors, begin, end, w] {
        try {
          fn(begin, end, static_cast<std::size_t>(w));
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace resgrass
