#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mtrend/ingest.hpp"
#include "mtrend/price_series.hpp"
#include "mtrend/scale_schedule.hpp"
#include "mtrend/shift.hpp"
#include "mtrend/stats.hpp"
#include "mtrend/trend.hpp"

namespace mtrend {

// All writers emit '.' decimals, LF line endings, UTF-8. Undefined
// statistics are written as the literal NA, never as 0. Each returns the
// number of data rows written.

std::string iso_minute(std::int64_t minute);  // "YYYY-MM-DDTHH:MM:SSZ"

// minute_index,iso_time,bid,ask,filled
std::size_t write_series_csv(std::ostream& out, const PriceSeries& series);
PriceSeries read_series_csv(std::istream& in, int pip_digits = 5);

// t,tuple_hex,H
std::size_t write_trend_csv(std::ostream& out, const TrendMatrix& matrix);

// t,S
std::size_t write_shift_csv(std::ostream& out, const ShiftSeries& shifts);

// i,l_i,E_trend,E_counter,M_nonzero
std::size_t write_matching_csv(std::ostream& out, const ScaleSchedule& schedule,
                               const MatchingProfile& profile);

// eps,T,count
std::size_t write_collective_csv(std::ostream& out, const CollectiveCurve& curve);

// r,psi,pairs
std::size_t write_similarity_csv(std::ostream& out, const SimilarityHistogram& hist);

}  // namespace mtrend
