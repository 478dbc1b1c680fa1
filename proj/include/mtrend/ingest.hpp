#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <vector>

#include "mtrend/price_series.hpp"

namespace mtrend {

struct TickRecord {
    std::int64_t timestamp = 0;  // seconds since epoch, UTC
    Pips bid = 0;
    Pips ask = 0;
};

enum class TimeFormat { epoch_seconds, iso8601 };

struct TickFormat {
    char delimiter = ',';
    int timestamp_col = 0;
    int bid_col = 1;
    int ask_col = 2;
    TimeFormat time_format = TimeFormat::epoch_seconds;
    int pip_digits = 5;
    bool skip_header = false;
};

// Parses delimited tick rows. Out-of-order rows are stably sorted by
// timestamp. Throws ParseError / ValidationError with the offending line,
// EmptyInputError on an empty stream.
std::vector<TickRecord> parse_ticks(std::istream& in, const TickFormat& format);

struct GapPolicy {
    enum class Kind { carry_forward, strict };
    Kind kind = Kind::carry_forward;
    std::int64_t max_gap_minutes = 120;

    static GapPolicy carry_forward(std::int64_t max_gap = 120) {
        return {Kind::carry_forward, max_gap};
    }
    static GapPolicy strict() { return {Kind::strict, 0}; }
};

struct ResampleResult {
    PriceSeries series;
    std::int64_t discarded_slots = 0;  // slots dropped by gap splitting
    std::int64_t segments = 1;         // contiguous segments found
};

// Last observation carried forward onto minute boundaries: slot at minute m
// holds the latest tick with timestamp <= m*60. Boundaries run from
// ceil(first_tick/60) to ceil(last_tick/60). Minutes without a fresh tick
// copy the previous slot and set filled. Under carry_forward, filled runs
// longer than max_gap split the series; the longest segment is returned.
ResampleResult resample(std::span<const TickRecord> ticks, const GapPolicy& policy);

}  // namespace mtrend
