#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace mtrend {

// Prices are held as integers scaled to pips (10^-pip_digits of the quote
// currency). All trend/shift comparisons are then exact; no float ties.
using Pips = std::int64_t;

// Parses a positive decimal price into pips. Rejects empty input, signs,
// more fractional digits than pip_digits, and non-digit characters.
Pips parse_price(std::string_view text, int pip_digits);

std::string format_price(Pips value, int pip_digits);

}  // namespace mtrend
