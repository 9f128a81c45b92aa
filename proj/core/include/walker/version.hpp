#pragma once

namespace walker {
inline constexpr const char* kVersion = "0.3.0";
}
