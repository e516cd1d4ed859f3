#pragma once

namespace ggp {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kEngine = "ggp 0.1.0";

}  // namespace ggp
