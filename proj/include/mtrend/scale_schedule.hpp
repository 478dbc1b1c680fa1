#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace mtrend {

// Ordered time lags l_1..l_N in minutes. The recurrence schedule is
// l_1 = 1, l_2 = 2, l_i = l_{i-2} + i; equivalently l_{2k-1} = k^2 and
// l_{2k} = k(k+1), so N = 100 reaches 2550 minutes. Immutable value type.
class ScaleSchedule {
public:
    static ScaleSchedule recurrence(int n);
    // "recur:N" or an explicit increasing comma-separated list "1,5,30".
    static ScaleSchedule parse(std::string_view spec);
    static ScaleSchedule from_lags(std::vector<std::int64_t> lags);

    int size() const noexcept { return static_cast<int>(lags_.size()); }
    // 1-based, matching the l_i notation.
    std::int64_t lag(int i) const { return lags_[static_cast<std::size_t>(i) - 1]; }
    std::int64_t max_lag() const { return lags_.back(); }
    const std::vector<std::int64_t>& lags() const noexcept { return lags_; }

private:
    explicit ScaleSchedule(std::vector<std::int64_t> lags) : lags_(std::move(lags)) {}
    std::vector<std::int64_t> lags_;
};

}  // namespace mtrend
