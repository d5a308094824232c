#pragma once

namespace ranlase {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ranlase
