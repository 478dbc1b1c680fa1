#pragma once

#include <cstdint>
#include <vector>

#include "mtrend/price_series.hpp"
#include "mtrend/stats.hpp"
#include "mtrend/synth.hpp"

namespace mtrend::test {

// Series with the given ask path and a fixed symmetric spread (pips).
inline PriceSeries series_from_asks(const std::vector<Pips>& asks, Pips spread = 0) {
    PriceSeries series;
    for (Pips ask : asks) {
        series.asks.push_back(ask);
        series.bids.push_back(ask - spread);
    }
    series.filled.assign(asks.size(), 0);
    return series;
}

// i.i.d. uniform random tuples paired with independent uniform shifts in
// {-1, 0, +1}; the null model the statistics are checked against.
inline AlignedSample random_sample(std::size_t m, int width, std::uint64_t seed) {
    SplitMix64 rng(seed);
    AlignedSample sample;
    sample.tuple_width = width;
    for (std::size_t k = 0; k < m; ++k) {
        TrendTuple tuple(width);
        for (int i = 0; i < width; ++i)
            if (rng.next() & 1u) tuple.set_sign(i, +1);
        sample.t_values.push_back(static_cast<std::int64_t>(k));
        sample.tuples.push_back(tuple);
        sample.shifts.push_back(static_cast<std::int8_t>(rng.next() % 3) - 1);
    }
    return sample;
}

}  // namespace mtrend::test
