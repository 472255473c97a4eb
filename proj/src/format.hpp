#pragma once

#include <string>

namespace harmroot::detail {

/// Shortest text with up to 17 significant digits (printf %.17g); the same
/// formatting is used for expression constants, JSON reports, and CSV stats
/// so identical inputs always serialize to identical bytes.
std::string format_double(double x);

}  // namespace harmroot::detail
