#include "mtrend/stats.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include "mtrend/errors.hpp"

namespace mtrend {

std::int64_t AlignedSample::nonzero_count() const noexcept {
    std::int64_t count = 0;
    for (std::int8_t s : shifts) count += s != 0;
    return count;
}

AlignedSample align(const TrendMatrix& matrix, const ShiftSeries& shifts) {
    if (matrix.series_length != shifts.series_length)
        throw AlignmentError("trend matrix and shift series derive from series of lengths " +
                             std::to_string(matrix.series_length) + " and " +
                             std::to_string(shifts.series_length));
    AlignedSample sample;
    sample.tuple_width = matrix.schedule.size();
    const std::int64_t t_first = matrix.t_start;
    const std::int64_t t_last = shifts.t_end();
    if (t_last < t_first) return sample;
    const auto count = static_cast<std::size_t>(t_last - t_first + 1);
    sample.t_values.reserve(count);
    sample.tuples.reserve(count);
    sample.shifts.reserve(count);
    for (std::int64_t t = t_first; t <= t_last; ++t) {
        sample.t_values.push_back(t);
        sample.tuples.push_back(matrix.tuples[static_cast<std::size_t>(t - t_first)]);
        sample.shifts.push_back(shifts.values[static_cast<std::size_t>(t)]);
    }
    return sample;
}

AlignedSample subsample(const AlignedSample& sample, std::size_t k) {
    if (k == 0) throw ValidationError("subsample size must be positive");
    if (k >= sample.size()) return sample;
    AlignedSample out;
    out.tuple_width = sample.tuple_width;
    out.t_values.reserve(k);
    out.tuples.reserve(k);
    out.shifts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t idx = i * sample.size() / k;
        out.t_values.push_back(sample.t_values[idx]);
        out.tuples.push_back(sample.tuples[idx]);
        out.shifts.push_back(sample.shifts[idx]);
    }
    return out;
}

Ratio matching_average(const AlignedSample& sample, int scale_index, Variant variant) {
    if (scale_index < 1 || scale_index > sample.tuple_width)
        throw ValidationError("scale index " + std::to_string(scale_index) +
                              " outside tuple width " + std::to_string(sample.tuple_width));
    std::int64_t sum = 0;
    std::int64_t nonzero = 0;
    const int pos = scale_index - 1;
    for (std::size_t k = 0; k < sample.size(); ++k) {
        const int s = sample.shifts[k];
        if (s == 0) continue;
        int h = sample.tuples[k].sign(pos);
        if (variant == Variant::counter) h = -h;
        sum += h == s ? +1 : -1;
        ++nonzero;
    }
    if (nonzero == 0)
        throw UndefinedStatisticError("matching average undefined: no instants with S != 0");
    return Ratio{sum, nonzero};
}

MatchingProfile matching_profile(const AlignedSample& sample) {
    MatchingProfile profile;
    profile.nonzero_count = sample.nonzero_count();
    profile.trend_avg.reserve(static_cast<std::size_t>(sample.tuple_width));
    profile.counter_avg.reserve(static_cast<std::size_t>(sample.tuple_width));
    for (int i = 1; i <= sample.tuple_width; ++i) {
        profile.trend_avg.push_back(matching_average(sample, i, Variant::trend));
        profile.counter_avg.push_back(matching_average(sample, i, Variant::counter));
    }
    return profile;
}

std::vector<double> default_epsilon_grid(int n) {
    if (n < 1) throw ValidationError("tuple width must be >= 1");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 1; j <= n + 1; ++j)
        grid.push_back(static_cast<double>(j) / static_cast<double>(n));
    return grid;
}

CollectiveCurve collective_response(const AlignedSample& sample,
                                    std::span<const double> epsilon_grid) {
    if (epsilon_grid.empty()) throw ValidationError("epsilon grid must not be empty");
    for (std::size_t j = 1; j < epsilon_grid.size(); ++j)
        if (epsilon_grid[j] <= epsilon_grid[j - 1])
            throw ValidationError("epsilon grid must be strictly increasing");

    // H(t) is quantized to |2*popcount - N| / N; bucket by the numerator.
    const int n = sample.tuple_width;
    std::vector<std::int64_t> count_by_h(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> abs_s_by_h(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t k = 0; k < sample.size(); ++k) {
        const int hnum = std::abs(2 * sample.tuples[k].popcount() - n);
        count_by_h[static_cast<std::size_t>(hnum)] += 1;
        abs_s_by_h[static_cast<std::size_t>(hnum)] += sample.shifts[k] < 0
                                                          ? -sample.shifts[k]
                                                          : sample.shifts[k];
    }

    CollectiveCurve curve;
    curve.epsilons.assign(epsilon_grid.begin(), epsilon_grid.end());
    curve.values.reserve(epsilon_grid.size());
    curve.counts.reserve(epsilon_grid.size());
    for (double eps : epsilon_grid) {
        std::int64_t count = 0;
        std::int64_t sum = 0;
        for (int hnum = 0; hnum <= n; ++hnum) {
            if (static_cast<double>(hnum) / static_cast<double>(n) < eps) {
                count += count_by_h[static_cast<std::size_t>(hnum)];
                sum += abs_s_by_h[static_cast<std::size_t>(hnum)];
            }
        }
        curve.counts.push_back(count);
        if (count > 0)
            curve.values.push_back(static_cast<double>(sum) / static_cast<double>(count));
        else
            curve.values.push_back(std::nullopt);
    }
    return curve;
}

namespace {

struct TupleKey {
    std::uint64_t lo;
    std::uint64_t hi;
    bool operator==(const TupleKey&) const = default;
};

struct TupleKeyHash {
    std::size_t operator()(const TupleKey& k) const noexcept {
        std::uint64_t x = k.lo ^ (k.hi * 0x9E3779B97F4A7C15ull);
        x ^= x >> 33;
        x *= 0xFF51AFD7ED558CCDull;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace

TupleGroups build_tuple_index(const AlignedSample& sample) {
    TupleGroups groups;
    groups.tuple_width = sample.tuple_width;
    groups.total = static_cast<std::int64_t>(sample.size());
    std::unordered_map<TupleKey, std::size_t, TupleKeyHash> index;
    index.reserve(sample.size());
    for (std::size_t k = 0; k < sample.size(); ++k) {
        const TupleKey key{sample.tuples[k].lo(), sample.tuples[k].hi()};
        auto [it, inserted] = index.try_emplace(key, groups.groups.size());
        if (inserted)
            groups.groups.push_back({key.lo, key.hi, 0, {}});
        TupleGroups::Group& g = groups.groups[it->second];
        g.count += 1;
        g.shift_counts[static_cast<std::size_t>(sample.shifts[k] + 1)] += 1;
    }
    // Canonical order so downstream output is platform-independent.
    std::sort(groups.groups.begin(), groups.groups.end(),
              [](const TupleGroups::Group& a, const TupleGroups::Group& b) {
                  return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
              });
    return groups;
}

namespace {

// Cross-group numerator for sum over pairs of |s - s'|: with per-group
// class counts (a, b, c) = (#S=-1, #S=0, #S=+1), the contribution is
// a_u*(b_v + 2c_v) + b_u*(a_v + c_v) + c_u*(2a_v + b_v).
struct GroupScratch {
    std::vector<std::uint64_t> lo, hi;
    std::vector<std::int64_t> n, a, b, c, x, y, z;  // x = b+2c, y = a+c, z = 2a+b
};

GroupScratch make_scratch(const TupleGroups& groups) {
    GroupScratch s;
    const std::size_t g = groups.groups.size();
    s.lo.reserve(g); s.hi.reserve(g); s.n.reserve(g);
    s.a.reserve(g); s.b.reserve(g); s.c.reserve(g);
    s.x.reserve(g); s.y.reserve(g); s.z.reserve(g);
    for (const auto& grp : groups.groups) {
        s.lo.push_back(grp.lo);
        s.hi.push_back(grp.hi);
        s.n.push_back(grp.count);
        const std::int64_t a = grp.shift_counts[0];
        const std::int64_t b = grp.shift_counts[1];
        const std::int64_t c = grp.shift_counts[2];
        s.a.push_back(a); s.b.push_back(b); s.c.push_back(c);
        s.x.push_back(b + 2 * c);
        s.y.push_back(a + c);
        s.z.push_back(2 * a + b);
    }
    return s;
}

}  // namespace

SimilarityHistogram similarity_histogram(const TupleGroups& groups) {
    if (groups.groups.empty()) throw EmptyInputError("similarity histogram: no tuples");
    const int n = groups.tuple_width;
    SimilarityHistogram hist;
    hist.tuple_width = n;
    hist.numerators.assign(static_cast<std::size_t>(n) + 1, 0);
    hist.pair_counts.assign(static_cast<std::size_t>(n) + 1, 0);

    const GroupScratch s = make_scratch(groups);
    const std::size_t g = s.n.size();

    // Within-group pairs land at r = 0: C(n_u, 2) pairs, numerator
    // a*b + b*c + 2*a*c (each unordered class pair once).
    for (std::size_t u = 0; u < g; ++u) {
        hist.pair_counts[0] += static_cast<std::uint64_t>(s.n[u] * (s.n[u] - 1) / 2);
        hist.numerators[0] +=
            static_cast<std::uint64_t>(s.a[u] * s.b[u] + s.b[u] * s.c[u] + 2 * s.a[u] * s.c[u]);
    }

    std::uint64_t* const num = hist.numerators.data();
    std::uint64_t* const cnt = hist.pair_counts.data();
    if (n <= 64) {
        const std::uint64_t* lo = s.lo.data();
        for (std::size_t u = 0; u < g; ++u) {
            const std::uint64_t lu = lo[u];
            const std::int64_t nu = s.n[u], au = s.a[u], bu = s.b[u], cu = s.c[u];
            for (std::size_t v = u + 1; v < g; ++v) {
                const int r = std::popcount(lu ^ lo[v]);
                cnt[r] += static_cast<std::uint64_t>(nu * s.n[v]);
                num[r] += static_cast<std::uint64_t>(au * s.x[v] + bu * s.y[v] + cu * s.z[v]);
            }
        }
    } else {
        for (std::size_t u = 0; u < g; ++u) {
            const std::uint64_t lu = s.lo[u], hu = s.hi[u];
            const std::int64_t nu = s.n[u], au = s.a[u], bu = s.b[u], cu = s.c[u];
            for (std::size_t v = u + 1; v < g; ++v) {
                const int r = std::popcount(lu ^ s.lo[v]) + std::popcount(hu ^ s.hi[v]);
                cnt[r] += static_cast<std::uint64_t>(nu * s.n[v]);
                num[r] += static_cast<std::uint64_t>(au * s.x[v] + bu * s.y[v] + cu * s.z[v]);
            }
        }
    }
    return hist;
}

SimilarityHistogram similarity_histogram_naive(const AlignedSample& sample,
                                               std::size_t guard_bound) {
    if (sample.size() > guard_bound)
        throw OracleSizeError("naive similarity oracle limited to " +
                              std::to_string(guard_bound) + " samples, got " +
                              std::to_string(sample.size()));
    const int n = sample.tuple_width;
    SimilarityHistogram hist;
    hist.tuple_width = n;
    hist.numerators.assign(static_cast<std::size_t>(n) + 1, 0);
    hist.pair_counts.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            const int r = sample.tuples[i].distance(sample.tuples[j]);
            const int diff = std::abs(sample.shifts[i] - sample.shifts[j]);
            hist.pair_counts[static_cast<std::size_t>(r)] += 1;
            hist.numerators[static_cast<std::size_t>(r)] += static_cast<std::uint64_t>(diff);
        }
    }
    return hist;
}

}  // namespace mtrend
