#pragma once

namespace toricq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace toricq
