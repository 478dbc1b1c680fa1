#include "mtrend/pips.hpp"

#include "mtrend/errors.hpp"

namespace mtrend {

Pips parse_price(std::string_view text, int pip_digits) {
    if (text.empty()) throw ValidationError("empty price field");
    std::size_t pos = 0;
    Pips integral = 0;
    bool any_digit = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        integral = integral * 10 + (text[pos] - '0');
        if (integral > 1'000'000'000'000LL)
            throw ValidationError("price out of range: " + std::string(text));
        ++pos;
        any_digit = true;
    }
    Pips frac = 0;
    int frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (frac_digits == pip_digits)
                throw ValidationError("price has more than " + std::to_string(pip_digits) +
                                      " fractional digits: " + std::string(text));
            frac = frac * 10 + (text[pos] - '0');
            ++frac_digits;
            ++pos;
            any_digit = true;
        }
    }
    if (!any_digit || pos != text.size())
        throw ValidationError("malformed price: " + std::string(text));
    Pips scale = 1;
    for (int i = 0; i < pip_digits; ++i) scale *= 10;
    Pips frac_scale = 1;
    for (int i = frac_digits; i < pip_digits; ++i) frac_scale *= 10;
    Pips value = integral * scale + frac * frac_scale;
    if (value <= 0) throw ValidationError("price must be positive: " + std::string(text));
    return value;
}

std::string format_price(Pips value, int pip_digits) {
    Pips scale = 1;
    for (int i = 0; i < pip_digits; ++i) scale *= 10;
    std::string out = std::to_string(value / scale);
    if (pip_digits > 0) {
        std::string frac = std::to_string(value % scale);
        out += '.';
        out += std::string(static_cast<std::size_t>(pip_digits) - frac.size(), '0');
        out += frac;
    }
    return out;
}

}  // namespace mtrend
