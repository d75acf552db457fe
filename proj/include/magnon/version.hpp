#pragma once

namespace magnon {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace magnon
