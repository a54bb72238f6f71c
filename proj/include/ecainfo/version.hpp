#pragma once

namespace ecainfo {

inline constexpr char kToolName[] = "eca-infodyn";
inline constexpr char kToolVersion[] = "0.1.0";

} // namespace ecainfo
