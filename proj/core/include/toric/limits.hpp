#pragma once

#include <cstddef>
#include <string_view>

namespace toric {

// Safety caps for the exponential enumerations. Exceeding any of them raises
// CapExceeded.
struct Limits {
  std::size_t max_cycles = 1'000'000;
  std::size_t max_subgraphs = std::size_t{1} << 20;
  std::size_t max_insertions = 1'000'000;
  std::size_t max_supports = 1'000'000;

  // Environment variable read by from_environment().
  static constexpr std::string_view kEnvVar = "TORICGRAPH_CAPS";

  // Defaults overridden by TORICGRAPH_CAPS, a comma-separated list of
  // key=value pairs with keys cycles, subgraphs, insertions, supports.
  // Unknown keys or malformed values raise InvalidArgument.
  static Limits from_environment();

  // Same parsing applied to an explicit string.
  static Limits parse(std::string_view spec);
  static Limits parse(std::string_view spec, Limits base);
};

}  // namespace toric
