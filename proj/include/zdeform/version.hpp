#pragma once

namespace zdeform {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zdeform
