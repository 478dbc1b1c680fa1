#include "mtrend/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "mtrend/errors.hpp"

namespace mtrend {
namespace {

// Days since 1970-01-01 for a proleptic Gregorian civil date.
std::int64_t days_from_civil(int y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const std::int64_t yoe = y - era * 400;
    const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

int parse_fixed_digits(std::string_view s, std::size_t pos, int count, std::size_t line) {
    int value = 0;
    for (int i = 0; i < count; ++i) {
        char c = pos + i < s.size() ? s[pos + i] : '\0';
        if (c < '0' || c > '9') throw ParseError("malformed timestamp: " + std::string(s), line);
        value = value * 10 + (c - '0');
    }
    return value;
}

std::int64_t parse_timestamp(std::string_view field, TimeFormat format, std::size_t line) {
    if (format == TimeFormat::epoch_seconds) {
        std::int64_t ts = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), ts);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ParseError("malformed epoch timestamp: " + std::string(field), line);
        return ts;
    }
    // YYYY-MM-DD[T ]HH:MM:SS with optional trailing Z
    if (field.size() < 19 || field[4] != '-' || field[7] != '-' ||
        (field[10] != 'T' && field[10] != ' ') || field[13] != ':' || field[16] != ':')
        throw ParseError("malformed ISO timestamp: " + std::string(field), line);
    if (field.size() > 19 && !(field.size() == 20 && field[19] == 'Z'))
        throw ParseError("malformed ISO timestamp: " + std::string(field), line);
    int year = parse_fixed_digits(field, 0, 4, line);
    int month = parse_fixed_digits(field, 5, 2, line);
    int day = parse_fixed_digits(field, 8, 2, line);
    int hour = parse_fixed_digits(field, 11, 2, line);
    int minute = parse_fixed_digits(field, 14, 2, line);
    int second = parse_fixed_digits(field, 17, 2, line);
    if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 || second > 60)
        throw ParseError("timestamp out of range: " + std::string(field), line);
    return days_from_civil(year, month, day) * 86400 + hour * 3600 + minute * 60 + second;
}

std::vector<std::string_view> split_fields(std::string_view row, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t end = row.find(delimiter, start);
        if (end == std::string_view::npos) {
            fields.push_back(row.substr(start));
            break;
        }
        fields.push_back(row.substr(start, end - start));
        start = end + 1;
    }
    return fields;
}

}  // namespace

std::vector<TickRecord> parse_ticks(std::istream& in, const TickFormat& format) {
    std::vector<TickRecord> ticks;
    std::string row;
    std::size_t line = 0;
    const int needed =
        std::max({format.timestamp_col, format.bid_col, format.ask_col}) + 1;
    while (std::getline(in, row)) {
        ++line;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (line == 1 && format.skip_header) continue;
        if (row.empty()) continue;
        auto fields = split_fields(row, format.delimiter);
        if (static_cast<int>(fields.size()) < needed)
            throw ParseError("expected at least " + std::to_string(needed) + " columns, got " +
                                 std::to_string(fields.size()),
                             line);
        TickRecord tick;
        tick.timestamp =
            parse_timestamp(fields[format.timestamp_col], format.time_format, line);
        try {
            tick.bid = parse_price(fields[format.bid_col], format.pip_digits);
            tick.ask = parse_price(fields[format.ask_col], format.pip_digits);
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line);
        }
        if (tick.bid > tick.ask)
            throw ValidationError("bid exceeds ask (" + format_price(tick.bid, format.pip_digits) +
                                      " > " + format_price(tick.ask, format.pip_digits) + ")",
                                  line);
        ticks.push_back(tick);
    }
    if (ticks.empty()) throw EmptyInputError("no tick records in input");
    std::stable_sort(ticks.begin(), ticks.end(),
                     [](const TickRecord& a, const TickRecord& b) {
                         return a.timestamp < b.timestamp;
                     });
    return ticks;
}

ResampleResult resample(std::span<const TickRecord> ticks, const GapPolicy& policy) {
    if (ticks.empty()) throw EmptyInputError("resample: no ticks");
    const auto ceil_minute = [](std::int64_t ts) {
        return ts >= 0 ? (ts + 59) / 60 : ts / 60;
    };
    const std::int64_t first_minute = ceil_minute(ticks.front().timestamp);
    const std::int64_t last_minute = ceil_minute(ticks.back().timestamp);
    if (first_minute * 60 < ticks.front().timestamp)
        throw WindowError("resample: first minute boundary precedes first tick");

    PriceSeries series;
    series.anchor_minute = first_minute;
    const std::size_t slots = static_cast<std::size_t>(last_minute - first_minute + 1);
    series.bids.reserve(slots);
    series.asks.reserve(slots);
    series.filled.reserve(slots);

    std::size_t next = 0;
    for (std::int64_t m = first_minute; m <= last_minute; ++m) {
        bool fresh = false;
        while (next < ticks.size() && ticks[next].timestamp <= m * 60) {
            ++next;
            fresh = true;
        }
        if (!fresh) {
            if (policy.kind == GapPolicy::Kind::strict)
                throw GapError("empty minute at " + std::to_string(m * 60) +
                               "s (minute index " + std::to_string(m) + ")");
            series.bids.push_back(series.bids.back());
            series.asks.push_back(series.asks.back());
            series.filled.push_back(1);
        } else {
            series.bids.push_back(ticks[next - 1].bid);
            series.asks.push_back(ticks[next - 1].ask);
            series.filled.push_back(0);
        }
    }

    ResampleResult result;
    if (policy.kind == GapPolicy::Kind::strict) {
        result.series = std::move(series);
        return result;
    }

    // Split on filled runs longer than max_gap; keep the longest segment.
    struct Segment {
        std::size_t begin, end;  // [begin, end)
    };
    std::vector<Segment> segments;
    std::size_t seg_start = 0;
    std::size_t i = 0;
    const std::size_t n = series.size();
    while (i < n) {
        if (!series.filled[i]) {
            ++i;
            continue;
        }
        std::size_t run_end = i;
        while (run_end < n && series.filled[run_end]) ++run_end;
        if (static_cast<std::int64_t>(run_end - i) > policy.max_gap_minutes) {
            if (i > seg_start) segments.push_back({seg_start, i});
            seg_start = run_end;
        }
        i = run_end;
    }
    if (seg_start < n) segments.push_back({seg_start, n});

    result.segments = static_cast<std::int64_t>(std::max<std::size_t>(segments.size(), 1));
    if (segments.size() == 1 && segments[0].begin == 0 && segments[0].end == n) {
        result.series = std::move(series);
        return result;
    }
    if (segments.empty()) throw GapError("resample: no segment survives gap splitting");
    const auto best = *std::max_element(
        segments.begin(), segments.end(),
        [](const Segment& a, const Segment& b) { return a.end - a.begin < b.end - b.begin; });
    PriceSeries kept;
    kept.anchor_minute = series.anchor_minute + static_cast<std::int64_t>(best.begin);
    kept.pip_digits = series.pip_digits;
    kept.bids.assign(series.bids.begin() + best.begin, series.bids.begin() + best.end);
    kept.asks.assign(series.asks.begin() + best.begin, series.asks.begin() + best.end);
    kept.filled.assign(series.filled.begin() + best.begin, series.filled.begin() + best.end);
    result.discarded_slots = static_cast<std::int64_t>(n - kept.size());
    result.series = std::move(kept);
    return result;
}

}  // namespace mtrend
