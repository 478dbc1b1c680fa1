#include "mtrend/trend.hpp"

#include <cstdio>

#include "mtrend/errors.hpp"

namespace mtrend {

TrendTuple::TrendTuple(int width) : width_(width) {
    if (width < 1 || width > kMaxWidth)
        throw ValidationError("tuple width must be in [1, " + std::to_string(kMaxWidth) +
                              "], got " + std::to_string(width));
}

void TrendTuple::set_sign(int pos, int sign) {
    const std::uint64_t mask = 1ull << (pos & 63);
    std::uint64_t& word = pos < 64 ? lo_ : hi_;
    if (sign > 0)
        word |= mask;
    else
        word &= ~mask;
}

TrendTuple TrendTuple::countered() const noexcept {
    TrendTuple flipped = *this;
    flipped.lo_ = ~lo_;
    flipped.hi_ = ~hi_;
    if (width_ < 64) {
        flipped.lo_ &= (1ull << width_) - 1;
        flipped.hi_ = 0;
    } else if (width_ < 128) {
        flipped.hi_ &= width_ == 64 ? 0 : (1ull << (width_ - 64)) - 1;
    }
    return flipped;
}

std::string TrendTuple::hex() const {
    char buf[36];
    if (width_ > 64)
        std::snprintf(buf, sizeof buf, "%0*llx%016llx", (width_ - 64 + 3) / 4,
                      static_cast<unsigned long long>(hi_),
                      static_cast<unsigned long long>(lo_));
    else
        std::snprintf(buf, sizeof buf, "%0*llx", (width_ + 3) / 4,
                      static_cast<unsigned long long>(lo_));
    return buf;
}

Ratio homogeneity(const TrendTuple& tuple) {
    const std::int64_t n = tuple.width();
    std::int64_t sum = 2 * tuple.popcount() - n;
    return Ratio{sum < 0 ? -sum : sum, n};
}

int trend_at(const PriceSeries& series, std::int64_t lag, std::int64_t t) {
    if (t - lag < 0 || t >= static_cast<std::int64_t>(series.size()))
        throw WindowError("trend window [t-lag, t] outside series: t=" + std::to_string(t) +
                          " lag=" + std::to_string(lag));
    return series.asks[static_cast<std::size_t>(t)] >
                   series.asks[static_cast<std::size_t>(t - lag)]
               ? +1
               : -1;
}

TrendMatrix trend_matrix(const PriceSeries& series, const ScaleSchedule& schedule) {
    if (schedule.size() > TrendTuple::kMaxWidth)
        throw ValidationError("schedule width " + std::to_string(schedule.size()) +
                              " exceeds tuple packing bound");
    const std::int64_t t_len = static_cast<std::int64_t>(series.size());
    const std::int64_t max_lag = schedule.max_lag();
    if (t_len <= max_lag)
        throw InsufficientDataError("series length " + std::to_string(t_len) +
                                    " <= largest lag " + std::to_string(max_lag));
    TrendMatrix matrix{.tuples = {}, .t_start = max_lag, .schedule = schedule,
                       .series_length = series.size()};
    matrix.tuples.reserve(static_cast<std::size_t>(t_len - max_lag));
    const int n = schedule.size();
    for (std::int64_t t = max_lag; t < t_len; ++t) {
        TrendTuple tuple(n);
        const Pips ask_t = series.asks[static_cast<std::size_t>(t)];
        for (int i = 1; i <= n; ++i) {
            if (ask_t > series.asks[static_cast<std::size_t>(t - schedule.lag(i))])
                tuple.set_sign(i - 1, +1);
        }
        matrix.tuples.push_back(tuple);
    }
    return matrix;
}

}  // namespace mtrend
