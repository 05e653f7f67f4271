#pragma once

// Internal helper for thread-count flags. Not installed.

#include <stdexcept>
#include <thread>

namespace flatavoid::detail {

// 0 means one worker per hardware thread; negative is rejected.
inline int resolve_threads(int requested) {
  if (requested < 0)
    throw std::invalid_argument("thread count must be nonnegative");
  if (requested > 0) return requested;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

}  // namespace flatavoid::detail
