#pragma once

namespace slet {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace slet
