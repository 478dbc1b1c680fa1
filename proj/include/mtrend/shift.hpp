#pragma once

#include <cstdint>
#include <vector>

#include "mtrend/price_series.hpp"

namespace mtrend {

// Three-valued currency rate shift over a holding horizon l_pr:
// -1 when ask(t + l_pr) < bid(t), +1 when bid(t + l_pr) > ask(t), 0
// otherwise. Moves that do not clear the bid/ask spread collapse to 0.
struct ShiftSeries {
    std::vector<std::int8_t> values;  // values[t] for t in [0, T-1-horizon]
    std::int64_t horizon = 0;
    std::size_t series_length = 0;

    std::int64_t t_end() const noexcept {
        return static_cast<std::int64_t>(series_length) - 1 - horizon;
    }
};

int shift_at(const PriceSeries& series, std::int64_t t, std::int64_t horizon);

// Applies shift_at over every admissible t. Throws InsufficientDataError
// when no t has a full horizon of future data.
ShiftSeries shift_series(const PriceSeries& series, std::int64_t horizon);

}  // namespace mtrend
