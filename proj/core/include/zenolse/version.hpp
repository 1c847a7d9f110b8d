#pragma once

#define ZENOLSE_VERSION "0.1.0"

namespace zenolse {
inline constexpr const char* version() { return ZENOLSE_VERSION; }
}  // namespace zenolse
