#pragma once

#include <string>

namespace fuzzdp {

/// Shortest-form rendering with 9 significant digits; locale independent.
std::string format_number(double v);

}  // namespace fuzzdp
