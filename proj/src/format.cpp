#include "fuzzdp/format.hpp"

#include <charconv>
#include <cmath>

namespace fuzzdp {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0;  // drop the sign of negative zero
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return {buf, res.ptr};
}

}  // namespace fuzzdp
