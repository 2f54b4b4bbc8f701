#pragma once

#include <string>

namespace ippg {

// Percentage formatting used by every report surface: one decimal place,
// half away from zero ("24.1", "-27.6").
std::string format_pct(double value);

}  // namespace ippg
