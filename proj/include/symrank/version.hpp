#pragma once

namespace symrank {
inline constexpr const char* kVersion = "0.1.0";
}
