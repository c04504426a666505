#pragma once

namespace stabkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace stabkit
