#pragma once

#include <string>

#include "fermat/enumerator.hpp"

namespace fermat::cli {

/// Self-contained log-log chart of a count series, one polyline per class.
/// Zero counts are omitted from their polyline.
std::string render_svg(const CountSeries& series);

}  // namespace fermat::cli
