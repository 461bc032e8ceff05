#pragma once

namespace cperm {

inline constexpr const char* kLibraryName = "cperm";
inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace cperm
