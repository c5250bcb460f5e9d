#pragma once

#include <string>
#include <string_view>

namespace apsvm {

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

/// Strict full-token parse; returns false on trailing garbage, empty input or non-finite results.
bool parse_double(std::string_view text, double& out);

} // namespace apsvm
