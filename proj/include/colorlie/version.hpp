#pragma once

namespace colorlie {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace colorlie
