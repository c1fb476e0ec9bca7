#include "islrec/number_format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace islrec {

std::string format_real(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

std::optional<double> parse_real(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // from_chars rejects a leading '+', which hand-edited files may carry.
    if (text.front() == '+') {
        text.remove_prefix(1);
        if (text.empty() || text.front() == '-') return std::nullopt;
    }
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(out)) return std::nullopt;
    return out;
}

}  // namespace islrec
