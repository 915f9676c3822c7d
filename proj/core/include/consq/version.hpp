#pragma once

namespace consq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace consq
