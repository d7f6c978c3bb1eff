#include "resgrass/enumerate.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "resgrass/errors.hpp"

namespace resgrass {

std::uint64_t projective_count(std::uint32_t q, std::size_t dim) {
  // 1 + q + ... + q^{dim-1}
  std::uint64_t total = 0, power = 1;
  for (std::size_t k = 0; k < dim; ++k) {
    if (total > std::numeric_limits<std::uint64_t>::max() - power) return std::numeric_limits<std::uint64_t>::max();
    total += power;
    if (k + 1 < dim && power > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    power *= q;
  }
  return total;
}

void projective_point(std::uint32_t q, std::size_t dim, std::uint64_t index, std::span<Coeff> out) {
  // Blocks by position p of the leading 1; block p holds q^{dim-1-p} points.
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t p = 0; p < dim; ++p) {
    std::uint64_t block = 1;
    for (std::size_t k = p + 1; k < dim; ++k) block *= q;
    if (index < block) {
      out[p] = 1;
      for (std::size_t k = dim; k-- > p + 1;) {
        out[k] = static_cast<Coeff>(index % q);
        index /= q;
      }
      return;
    }
    index -= block;
  }
  throw MathError("projective point index out of range");
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("RESGRASS_BUDGET")) {
    try {
      const auto v = std::stoull(env);
      if (v == 0) throw InputError("RESGRASS_BUDGET must be positive");
      return v;
    } catch (const std::logic_error&) {
      throw InputError(std::string("bad RESGRASS_BUDGET value '") + env + "'");
    }
  }
  return 10'000'000;
}

void require_budget(std::uint64_t count, std::uint64_t budget, const char* what) {
  if (count > budget)
    throw BudgetError(std::string(what) + ": " + std::to_string(count) + " candidates exceed the budget of " +
                      std::to_string(budget));
}

}  // namespace resgrass
