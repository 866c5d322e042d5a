#pragma once

namespace d2dcell {

inline constexpr const char* kToolName = "d2dcell";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace d2dcell
