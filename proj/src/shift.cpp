#include "mtrend/shift.hpp"

#include <cassert>
#include <string>

#include "mtrend/errors.hpp"

namespace mtrend {

int shift_at(const PriceSeries& series, std::int64_t t, std::int64_t horizon) {
    if (t < 0 || t + horizon >= static_cast<std::int64_t>(series.size()))
        throw WindowError("shift window [t, t+horizon] outside series: t=" +
                          std::to_string(t) + " horizon=" + std::to_string(horizon));
    const auto u = static_cast<std::size_t>(t);
    const auto v = static_cast<std::size_t>(t + horizon);
    const bool down = series.asks[v] < series.bids[u];
    const bool up = series.bids[v] > series.asks[u];
    assert(!(down && up));  // impossible while bid <= ask holds
    if (down) return -1;
    if (up) return +1;
    return 0;
}

ShiftSeries shift_series(const PriceSeries& series, std::int64_t horizon) {
    if (horizon < 1) throw ValidationError("horizon must be >= 1");
    const auto t_len = static_cast<std::int64_t>(series.size());
    if (t_len <= horizon)
        throw InsufficientDataError("series length " + std::to_string(t_len) +
                                    " <= horizon " + std::to_string(horizon));
    ShiftSeries shifts{.values = {}, .horizon = horizon, .series_length = series.size()};
    shifts.values.reserve(static_cast<std::size_t>(t_len - horizon));
    for (std::int64_t t = 0; t + horizon < t_len; ++t)
        shifts.values.push_back(static_cast<std::int8_t>(shift_at(series, t, horizon)));
    return shifts;
}

}  // namespace mtrend
