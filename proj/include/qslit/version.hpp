#pragma once

namespace qslit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace qslit
