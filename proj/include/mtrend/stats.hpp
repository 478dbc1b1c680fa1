#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mtrend/shift.hpp"
#include "mtrend/trend.hpp"

namespace mtrend {

// Minutes where both the trend tuple and the shift are defined
// (t >= l_N and t <= T - 1 - l_pr), with their tuples and shifts.
struct AlignedSample {
    std::vector<std::int64_t> t_values;
    std::vector<TrendTuple> tuples;
    std::vector<std::int8_t> shifts;
    int tuple_width = 0;

    std::size_t size() const noexcept { return t_values.size(); }
    std::int64_t nonzero_count() const noexcept;
};

// Intersects the validity windows. Both inputs must derive from the same
// PriceSeries; an empty intersection is a valid (empty) sample.
AlignedSample align(const TrendMatrix& matrix, const ShiftSeries& shifts);

// Deterministic evenly spaced time-subsample of at most k elements.
AlignedSample subsample(const AlignedSample& sample, std::size_t k);

enum class Variant { trend, counter };

// Conditional matching average E_i over instants with S != 0: mean of
// +1/-1 agreement between the scale-i trend sign and the shift sign.
// Exact fraction (matches - mismatches) / M_nonzero. The counter variant
// scores the flipped trend, so its value is exactly the negation.
Ratio matching_average(const AlignedSample& sample, int scale_index, Variant variant);

struct MatchingProfile {
    std::vector<Ratio> trend_avg;    // index i-1 holds E_i for the trend
    std::vector<Ratio> counter_avg;  // and for the counter-trend
    std::int64_t nonzero_count = 0;
};

MatchingProfile matching_profile(const AlignedSample& sample);

// T(eps): mean of |S| over instants with H(t) < eps (strict), per grid
// point. Undefined where the condition set is empty.
struct CollectiveCurve {
    std::vector<double> epsilons;
    std::vector<std::optional<double>> values;
    std::vector<std::int64_t> counts;
};

CollectiveCurve collective_response(const AlignedSample& sample,
                                    std::span<const double> epsilon_grid);

// {1/N, 2/N, ..., 1, 1 + 1/N}: aligned to the achievable quantization of H.
std::vector<double> default_epsilon_grid(int n);

// Deduplicated tuple index: per distinct tuple, its occurrence count and
// per-shift-class counts. Powers the grouped psi(r) computation.
struct TupleGroups {
    struct Group {
        std::uint64_t lo = 0;
        std::uint64_t hi = 0;
        std::int64_t count = 0;
        std::array<std::int64_t, 3> shift_counts{};  // S = -1, 0, +1
    };
    std::vector<Group> groups;
    int tuple_width = 0;
    std::int64_t total = 0;
};

TupleGroups build_tuple_index(const AlignedSample& sample);

// psi(r): mean |S(t_i) - S(t_j)| over unordered pairs of distinct times
// whose tuples are at Hamming distance r. Numerators and pair counts are
// exact integers; empty bins are undefined, never zero.
struct SimilarityHistogram {
    std::vector<std::uint64_t> numerators;   // index r in [0, N]
    std::vector<std::uint64_t> pair_counts;  // sums to C(M, 2)
    int tuple_width = 0;

    std::optional<double> psi(int r) const {
        const auto idx = static_cast<std::size_t>(r);
        if (pair_counts[idx] == 0) return std::nullopt;
        return static_cast<double>(numerators[idx]) / static_cast<double>(pair_counts[idx]);
    }
};

// Grouped fast path: iterates pairs of distinct tuples instead of pairs
// of times, O(G^2) with G = number of distinct tuples.
SimilarityHistogram similarity_histogram(const TupleGroups& groups);

// Literal double loop over all time pairs; the oracle the grouped path is
// checked against. Refuses samples above the guard bound.
SimilarityHistogram similarity_histogram_naive(const AlignedSample& sample,
                                               std::size_t guard_bound = 5000);

}  // namespace mtrend
