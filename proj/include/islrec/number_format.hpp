#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace islrec {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_real(double value);

/// Parses the whole of `text` as a finite double; nullopt otherwise.
std::optional<double> parse_real(std::string_view text);

}  // namespace islrec
