#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace hyperforge {

// HYPERFORGE_BUDGET, when set to a positive integer, replaces every default
// budget.
inline std::uint64_t budget_or_env(std::uint64_t fallback) {
  const char* env = std::getenv("HYPERFORGE_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    const unsigned long long v = std::stoull(env);
    return v == 0 ? fallback : v;
  } catch (...) {
    return fallback;
  }
}

}  // namespace hyperforge
