#pragma once

#include <cstdint>

namespace shortroots {

// Size caps shared by the library checks and the CLI.
struct Limits {
  std::uint64_t maxWeylOrder = 1152;  // SHORTROOTS_MAX_W
  int maxDegree = 8;                  // SHORTROOTS_MAX_DEGREE

  // Defaults overridden by the environment; throws ValidationError on malformed values.
  static Limits fromEnvironment();
};

}  // namespace shortroots
