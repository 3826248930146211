#include "shortroots/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <type_traits>

#include "shortroots/errors.hpp"

namespace shortroots {

namespace {

template <class T>
void readEnv(const char* name, T& out) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  const std::string_view text(raw);
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  bool negative = false;
  if constexpr (std::is_signed_v<T>) negative = value < 0;
  if (ec != std::errc() || ptr != text.data() + text.size() || negative)
    throw ValidationError(std::string(name) + "=" + raw + " is not a non-negative integer");
  out = value;
}

}  // namespace

Limits Limits::fromEnvironment() {
  Limits l;
  readEnv("SHORTROOTS_MAX_W", l.maxWeylOrder);
  readEnv("SHORTROOTS_MAX_DEGREE", l.maxDegree);
  return l;
}

}  // namespace shortroots
