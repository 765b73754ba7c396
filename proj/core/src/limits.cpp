#include "endoforge/limits.hpp"

#include <cstdlib>
#include <string>

namespace endoforge {

Limits Limits::from_env() {
  Limits limits;
  if (const char* raw = std::getenv("ENDOFORGE_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end != raw && *end == '\0' && v > 0) {
      limits.max_order = static_cast<std::size_t>(v);
      limits.max_enum_order = static_cast<std::size_t>(v);
    }
  }
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_env();
  return limits;
}

}  // namespace endoforge
