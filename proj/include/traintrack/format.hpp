#pragma once

#include <cstdio>
#include <string>

namespace tt {

/// Fixed float formatting for all emitted artifacts: 12 significant digits,
/// byte-deterministic across runs.
inline std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace tt
