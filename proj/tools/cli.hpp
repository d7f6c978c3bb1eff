#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "resgrass/grobner.hpp"

namespace resgrass::cli {

enum class Command { r1, check_point, oracle, fixtures, bench };

struct RunConfig {
  Command command = Command::r1;
  std::string fixture;
  std::string input;
  std::uint32_t p = 31991;
  std::uint32_t q = 5;
  bool json = false;
  std::uint64_t budget = 0;  // 0 = default_budget()
  std::string coords;
  std::optional<int> k;
  std::string order = "grevlex";
  bool eliminate = true;
  int runs = 3;
};

/// Exit codes: 0 success, 1 internal error, 2 input error, 3 budget exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resgrass::cli
