#pragma once

namespace likeiper {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace likeiper
