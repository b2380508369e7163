#pragma once

namespace koszul {

inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace koszul
