#pragma once

#include <cstdint>
#include <vector>

#include "mtrend/pips.hpp"

namespace mtrend {

// Evenly spaced 1-minute grid of bid/ask quotes. Slot t is wall-clock
// minute anchor_minute + t (UTC). filled[t] marks carried-forward slots.
// Immutable after construction; safe to share across threads.
struct PriceSeries {
    std::int64_t anchor_minute = 0;  // minutes since epoch of slot 0
    int pip_digits = 5;
    std::vector<Pips> bids;
    std::vector<Pips> asks;
    std::vector<std::uint8_t> filled;

    std::size_t size() const noexcept { return asks.size(); }
};

}  // namespace mtrend
