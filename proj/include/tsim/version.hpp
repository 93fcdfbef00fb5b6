#pragma once

#include <string_view>

namespace tsim {

inline constexpr std::string_view kVersion = "1.0.0";

}  // namespace tsim
