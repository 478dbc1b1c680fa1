#include "mtrend/scale_schedule.hpp"

#include <charconv>
#include <string>

#include "mtrend/errors.hpp"

namespace mtrend {

ScaleSchedule ScaleSchedule::recurrence(int n) {
    if (n < 1) throw ValidationError("schedule length must be >= 1");
    std::vector<std::int64_t> lags;
    lags.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (i == 1)
            lags.push_back(1);
        else if (i == 2)
            lags.push_back(2);
        else
            lags.push_back(lags[static_cast<std::size_t>(i) - 3] + i);
    }
    return ScaleSchedule(std::move(lags));
}

ScaleSchedule ScaleSchedule::from_lags(std::vector<std::int64_t> lags) {
    if (lags.empty()) throw ValidationError("schedule must not be empty");
    std::int64_t prev = 0;
    for (std::int64_t lag : lags) {
        if (lag <= prev)
            throw ValidationError("schedule lags must be positive and strictly increasing");
        prev = lag;
    }
    return ScaleSchedule(std::move(lags));
}

ScaleSchedule ScaleSchedule::parse(std::string_view spec) {
    constexpr std::string_view prefix = "recur:";
    if (spec.substr(0, prefix.size()) == prefix) {
        auto tail = spec.substr(prefix.size());
        int n = 0;
        auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
        if (ec != std::errc{} || ptr != tail.data() + tail.size())
            throw ValidationError("malformed schedule spec: " + std::string(spec));
        return recurrence(n);
    }
    std::vector<std::int64_t> lags;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string_view::npos) end = spec.size();
        auto field = spec.substr(start, end - start);
        std::int64_t lag = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), lag);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw ValidationError("malformed schedule entry: " + std::string(field));
        lags.push_back(lag);
        start = end + 1;
    }
    return from_lags(std::move(lags));
}

}  // namespace mtrend
