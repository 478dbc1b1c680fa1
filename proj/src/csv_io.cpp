#include "mtrend/csv_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>

#include "mtrend/errors.hpp"

namespace mtrend {
namespace {

// Civil date from days since 1970-01-01 (Gregorian).
void civil_from_days(std::int64_t z, int& y, int& m, int& d) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const std::int64_t doe = z - era * 146097;
    const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const std::int64_t mp = (5 * doy + 2) / 153;
    d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
    m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
    y = static_cast<int>(yoe + era * 400 + (m <= 2));
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string iso_minute(std::int64_t minute) {
    std::int64_t days = minute / 1440;
    std::int64_t rem = minute % 1440;
    if (rem < 0) {
        rem += 1440;
        days -= 1;
    }
    int y, m, d;
    civil_from_days(days, y, m, d);
    char buf[24];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:00Z", y, m, d,
                  static_cast<int>(rem / 60), static_cast<int>(rem % 60));
    return buf;
}

std::size_t write_series_csv(std::ostream& out, const PriceSeries& series) {
    out << "minute_index,iso_time,bid,ask,filled\n";
    for (std::size_t t = 0; t < series.size(); ++t) {
        const std::int64_t minute = series.anchor_minute + static_cast<std::int64_t>(t);
        out << minute << ',' << iso_minute(minute) << ','
            << format_price(series.bids[t], series.pip_digits) << ','
            << format_price(series.asks[t], series.pip_digits) << ','
            << int(series.filled[t]) << '\n';
    }
    return series.size();
}

PriceSeries read_series_csv(std::istream& in, int pip_digits) {
    PriceSeries series;
    series.pip_digits = pip_digits;
    std::string row;
    std::size_t line = 0;
    bool first_data = true;
    while (std::getline(in, row)) {
        ++line;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (row.empty()) continue;
        if (line == 1 && row.rfind("minute_index,", 0) == 0) continue;
        std::size_t p1 = row.find(',');
        std::size_t p2 = row.find(',', p1 + 1);
        std::size_t p3 = row.find(',', p2 + 1);
        std::size_t p4 = row.find(',', p3 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos || p3 == std::string::npos ||
            p4 == std::string::npos)
            throw ParseError("expected 5 columns in series CSV", line);
        const std::int64_t minute = std::stoll(row.substr(0, p1));
        if (first_data) {
            series.anchor_minute = minute;
            first_data = false;
        } else if (minute != series.anchor_minute + static_cast<std::int64_t>(series.size())) {
            throw ParseError("non-contiguous minute index in series CSV", line);
        }
        const Pips bid = parse_price(row.substr(p2 + 1, p3 - p2 - 1), pip_digits);
        const Pips ask = parse_price(row.substr(p3 + 1, p4 - p3 - 1), pip_digits);
        if (bid > ask) throw ValidationError("bid exceeds ask in series CSV", line);
        series.bids.push_back(bid);
        series.asks.push_back(ask);
        series.filled.push_back(row.substr(p4 + 1) == "1");
    }
    if (series.size() == 0) throw EmptyInputError("series CSV has no rows");
    return series;
}

std::size_t write_trend_csv(std::ostream& out, const TrendMatrix& matrix) {
    out << "t,tuple_hex,H\n";
    for (std::size_t k = 0; k < matrix.tuples.size(); ++k) {
        const Ratio h = homogeneity(matrix.tuples[k]);
        out << matrix.t_start + static_cast<std::int64_t>(k) << ','
            << matrix.tuples[k].hex() << ',' << format_double(h.value()) << '\n';
    }
    return matrix.tuples.size();
}

std::size_t write_shift_csv(std::ostream& out, const ShiftSeries& shifts) {
    out << "t,S\n";
    for (std::size_t t = 0; t < shifts.values.size(); ++t)
        out << t << ',' << int(shifts.values[t]) << '\n';
    return shifts.values.size();
}

std::size_t write_matching_csv(std::ostream& out, const ScaleSchedule& schedule,
                               const MatchingProfile& profile) {
    out << "i,l_i,E_trend,E_counter,M_nonzero\n";
    for (int i = 1; i <= schedule.size(); ++i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        out << i << ',' << schedule.lag(i) << ','
            << format_double(profile.trend_avg[idx].value()) << ','
            << format_double(profile.counter_avg[idx].value()) << ','
            << profile.nonzero_count << '\n';
    }
    return static_cast<std::size_t>(schedule.size());
}

std::size_t write_collective_csv(std::ostream& out, const CollectiveCurve& curve) {
    out << "eps,T,count\n";
    for (std::size_t j = 0; j < curve.epsilons.size(); ++j) {
        out << format_double(curve.epsilons[j]) << ',';
        if (curve.values[j])
            out << format_double(*curve.values[j]);
        else
            out << "NA";
        out << ',' << curve.counts[j] << '\n';
    }
    return curve.epsilons.size();
}

std::size_t write_similarity_csv(std::ostream& out, const SimilarityHistogram& hist) {
    out << "r,psi,pairs\n";
    for (int r = 0; r <= hist.tuple_width; ++r) {
        const auto idx = static_cast<std::size_t>(r);
        out << r << ',';
        if (const auto psi = hist.psi(r))
            out << format_double(*psi);
        else
            out << "NA";
        out << ',' << hist.pair_counts[idx] << '\n';
    }
    return static_cast<std::size_t>(hist.tuple_width) + 1;
}

}  // namespace mtrend
