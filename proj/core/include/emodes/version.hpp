#pragma once

namespace emodes {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace emodes
