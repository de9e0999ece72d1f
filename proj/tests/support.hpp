#pragma once

#include <functional>
#include <optional>

#include "cubulate/error.hpp"

namespace support {

/// Code of the cubulate::Error thrown by fn, or nullopt if none is thrown.
inline std::optional<cubulate::ErrorCode> error_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const cubulate::Error &e) {
    return e.code();
  }
  return std::nullopt;
}

} // namespace support
