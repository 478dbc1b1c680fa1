#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mtrend/price_series.hpp"
#include "mtrend/scale_schedule.hpp"

namespace mtrend {

// Exact fraction; statistics are accumulated in integers and only
// converted to double at the output boundary.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// N per-scale trend signs packed into at most 128 bits; bit i-1 set means
// h_i = +1. Equality of prices maps to -1 (the comparison is "strictly
// greater"), which is deterministic on integer pips.
class TrendTuple {
public:
    static constexpr int kMaxWidth = 128;

    TrendTuple() = default;
    explicit TrendTuple(int width);

    int width() const noexcept { return width_; }
    std::uint64_t lo() const noexcept { return lo_; }
    std::uint64_t hi() const noexcept { return hi_; }

    // 0-based bit position; sign is -1 or +1.
    void set_sign(int pos, int sign);
    int sign(int pos) const noexcept {
        const std::uint64_t word = pos < 64 ? lo_ : hi_;
        return (word >> (pos & 63)) & 1u ? +1 : -1;
    }

    int popcount() const noexcept { return std::popcount(lo_) + std::popcount(hi_); }
    int distance(const TrendTuple& other) const noexcept {
        return std::popcount(lo_ ^ other.lo_) + std::popcount(hi_ ^ other.hi_);
    }

    // Counter-trend: every sign flipped. Involution.
    TrendTuple countered() const noexcept;

    bool operator==(const TrendTuple& other) const noexcept = default;

    std::string hex() const;

private:
    std::uint64_t lo_ = 0;
    std::uint64_t hi_ = 0;
    int width_ = 0;
};

// H = |sum of signs| / N as an exact fraction: |2*popcount - N| / N.
Ratio homogeneity(const TrendTuple& tuple);

struct TrendMatrix {
    std::vector<TrendTuple> tuples;  // tuples[k] belongs to minute t_start + k
    std::int64_t t_start = 0;        // == l_N; earliest minute with full history
    ScaleSchedule schedule;
    std::size_t series_length = 0;
};

// Sign of the ask move over one lag: +1 iff ask(t) > ask(t - lag), else -1.
int trend_at(const PriceSeries& series, std::int64_t lag, std::int64_t t);

// One packed tuple per minute t in [l_N, T). Throws InsufficientDataError
// when T <= l_N, ValidationError when the schedule exceeds the packing bound.
TrendMatrix trend_matrix(const PriceSeries& series, const ScaleSchedule& schedule);

}  // namespace mtrend
