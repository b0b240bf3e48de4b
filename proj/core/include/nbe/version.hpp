#pragma once

namespace nbe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nbe
