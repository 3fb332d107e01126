#pragma once

namespace trib {

inline constexpr const char kVersion[] = "0.1.0";

// Certified-precision defaults echoed into run manifests.
inline constexpr const char kPrecisionNote[] = "root-bits=128;ball=double+4ulp";

}  // namespace trib
