#pragma once

namespace qsp {

inline constexpr const char* kToolName = "qspencer";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace qsp
