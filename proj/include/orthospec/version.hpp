#pragma once

namespace orthospec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace orthospec
