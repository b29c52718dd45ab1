#pragma once

namespace ptlat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ptlat
