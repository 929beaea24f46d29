#pragma once

namespace occtail {

inline constexpr const char* kToolName = "occtail";
inline constexpr const char* kVersion = "1.0.0";

} // namespace occtail
