#include "ippg/format.hpp"

#include <cmath>
#include <cstdlib>

namespace ippg {

std::string format_pct(double value) {
    const long long tenths = std::llround(value * 10.0);
    const bool negative = tenths < 0;
    const long long abs_tenths = negative ? -tenths : tenths;
    std::string out = negative ? "-" : "";
    out += std::to_string(abs_tenths / 10);
    out += ".";
    out += std::to_string(abs_tenths % 10);
    return out;
}

}  // namespace ippg
