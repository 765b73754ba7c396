#pragma once

#include <cstddef>

namespace endoforge {

/// Size caps for construction and exhaustive searches.
struct Limits {
  std::size_t max_order = 512;        // group construction
  std::size_t max_enum_order = 128;   // full endomorphism enumeration
  std::size_t max_census_order = 8;   // regular-subgroup census

  /// Defaults, with ENDOFORGE_MAX_ORDER (if set to a positive integer)
  /// overriding both the construction and the enumeration cap.
  static Limits from_env();
};

/// Process-wide defaults used when a call does not pass explicit limits.
const Limits& default_limits();

}  // namespace endoforge
