#pragma once

namespace schurforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace schurforge
