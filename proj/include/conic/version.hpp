#pragma once

namespace conic {

inline constexpr const char* version = "0.1.0";

} // namespace conic
