#pragma once

namespace spinscat {
inline constexpr const char *kVersion = "0.1.0";
}
