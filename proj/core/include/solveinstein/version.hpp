#pragma once

namespace solveinstein {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace solveinstein
