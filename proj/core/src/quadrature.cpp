#include "squig/quadrature.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace squig::numerics {

int default_max_level() {
  static const int level = [] {
    int value = 10;
    if (const char* env = std::getenv("SQUIG_MAX_QUAD_LEVEL")) {
      int parsed = 0;
      const char* end = env + std::strlen(env);
      auto [ptr, ec] = std::from_chars(env, end, parsed);
      if (ec == std::errc{} && ptr == end && parsed >= 4 && parsed <= 20) value = parsed;
    }
    return value;
  }();
  return level;
}

}  // namespace squig::numerics
