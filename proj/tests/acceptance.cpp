// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Usage: acceptance <path-to-cli-binary>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mtrend/errors.hpp"
#include "mtrend/scale_schedule.hpp"
#include "mtrend/shift.hpp"
#include "mtrend/stats.hpp"
#include "mtrend/synth.hpp"
#include "mtrend/trend.hpp"

using namespace mtrend;
namespace fs = std::filesystem;

namespace {

struct Check {
    std::string name;
    double budget_seconds;
    std::function<bool(std::string&)> body;
};

GeneratorSpec walk_spec(std::int64_t length, std::uint64_t seed, Pips step, Pips spread) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::random_walk;
    spec.length = length;
    spec.seed = seed;
    spec.step = step;
    spec.spread = spread;
    return spec;
}

AlignedSample aligned_walk(std::int64_t length, std::uint64_t seed, Pips spread, int width,
                           std::int64_t horizon) {
    const auto series = generate(walk_spec(length, seed, 1, spread));
    return align(trend_matrix(series, ScaleSchedule::recurrence(width)),
                 shift_series(series, horizon));
}

std::int64_t zero_count(const ShiftSeries& shifts) {
    std::int64_t zeros = 0;
    for (auto s : shifts.values) zeros += s == 0;
    return zeros;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool schedule_correctness(std::string& why) {
    const auto schedule = ScaleSchedule::recurrence(100);
    for (int k = 1; k <= 50; ++k) {
        if (schedule.lag(2 * k - 1) != static_cast<std::int64_t>(k) * k ||
            schedule.lag(2 * k) != static_cast<std::int64_t>(k) * (k + 1)) {
            why = "closed form broken at k=" + std::to_string(k);
            return false;
        }
    }
    if (schedule.lag(100) != 2550) {
        why = "l_100 != 2550";
        return false;
    }
    return true;
}

bool antisymmetry(std::string& why) {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto sample = aligned_walk(5000, seed, 2, 16, 15);
        const auto profile = matching_profile(sample);
        for (int i = 0; i < 16; ++i) {
            if (profile.counter_avg[i].num != -profile.trend_avg[i].num ||
                profile.counter_avg[i].den != profile.trend_avg[i].den) {
                why = "seed " + std::to_string(seed) + ", scale " + std::to_string(i + 1);
                return false;
            }
        }
    }
    return true;
}

AlignedSample random_aligned(std::size_t m, int width, std::uint64_t seed) {
    SplitMix64 rng(seed);
    AlignedSample sample;
    sample.tuple_width = width;
    for (std::size_t k = 0; k < m; ++k) {
        TrendTuple tuple(width);
        for (int i = 0; i < width; ++i)
            if (rng.next() & 1u) tuple.set_sign(i, +1);
        sample.t_values.push_back(static_cast<std::int64_t>(k));
        sample.tuples.push_back(tuple);
        sample.shifts.push_back(static_cast<std::int8_t>(rng.next() % 3) - 1);
    }
    return sample;
}

bool oracle_equivalence(std::string& why) {
    int instance = 0;
    for (int width : {8, 12, 20}) {
        for (std::size_t m : {50u, 400u, 2000u}) {
            for (std::uint64_t seed : {1u, 2u}) {
                if (++instance > 20) break;
                const auto sample = random_aligned(m, width, seed * 4057 + m);
                const auto grouped = similarity_histogram(build_tuple_index(sample));
                const auto naive = similarity_histogram_naive(sample);
                for (int r = 0; r <= width; ++r) {
                    const auto idx = static_cast<std::size_t>(r);
                    if (grouped.numerators[idx] != naive.numerators[idx] ||
                        grouped.pair_counts[idx] != naive.pair_counts[idx] ||
                        grouped.psi(r).has_value() != naive.psi(r).has_value()) {
                        why = "N=" + std::to_string(width) + " M=" + std::to_string(m) +
                              " r=" + std::to_string(r);
                        return false;
                    }
                }
            }
        }
    }
    // two extra instances from a price path (duplicate tuples, r=0 bin)
    for (std::uint64_t seed : {11u, 12u}) {
        const auto sample = aligned_walk(2000, seed, 2, 8, 15);
        const auto grouped = similarity_histogram(build_tuple_index(sample));
        const auto naive = similarity_histogram_naive(sample);
        for (int r = 0; r <= 8; ++r) {
            const auto idx = static_cast<std::size_t>(r);
            if (grouped.numerators[idx] != naive.numerators[idx] ||
                grouped.pair_counts[idx] != naive.pair_counts[idx]) {
                why = "price-path instance, r=" + std::to_string(r);
                return false;
            }
        }
    }
    return true;
}

bool null_model(std::string& why) {
    const auto sample = aligned_walk(100000, 42, 0, 20, 15);
    const auto profile = matching_profile(sample);
    for (int i = 0; i < 20; ++i) {
        if (std::abs(profile.trend_avg[i].value()) >= 0.02) {
            why = "matching |E_" + std::to_string(i + 1) +
                  "| = " + std::to_string(profile.trend_avg[i].value());
            return false;
        }
    }
    const auto hist = similarity_histogram(build_tuple_index(sample));
    std::uint64_t total_num = 0, total_pairs = 0;
    for (std::size_t r = 0; r <= 20; ++r) {
        total_num += hist.numerators[r];
        total_pairs += hist.pair_counts[r];
    }
    const double mean = double(total_num) / double(total_pairs);
    std::array<std::int64_t, 3> cls{};
    for (auto s : sample.shifts) cls[static_cast<std::size_t>(s + 1)] += 1;
    const double p1 = double(cls[0] * cls[1] + cls[1] * cls[2]) / double(total_pairs);
    const double p2 = double(cls[0] * cls[2]) / double(total_pairs);
    const double var = p1 + 4 * p2 - mean * mean;
    for (int r = 0; r <= 20; ++r) {
        if (!hist.psi(r)) continue;
        const double se =
            std::sqrt(var / double(hist.pair_counts[static_cast<std::size_t>(r)]));
        if (std::abs(*hist.psi(r) - mean) > 5 * se) {
            why = "psi(" + std::to_string(r) + ") = " + std::to_string(*hist.psi(r)) +
                  " vs mean " + std::to_string(mean) + " (5 SE = " + std::to_string(5 * se) +
                  ", pairs = " + std::to_string(hist.pair_counts[static_cast<std::size_t>(r)]) +
                  ")";
            return false;
        }
    }
    return true;
}

bool contrarian_control(std::string& why) {
    GeneratorSpec spec;
    spec.kind = GeneratorSpec::Kind::mean_revert;
    spec.length = 100000;
    spec.seed = 13;
    spec.step = 5;
    spec.spread = 0;
    spec.reversion = 0.05;
    spec.anchor_price = 120000;
    const auto series = generate(spec);
    const auto sample = align(trend_matrix(series, ScaleSchedule::recurrence(16)),
                              shift_series(series, 15));
    const auto profile = matching_profile(sample);
    if (!(profile.trend_avg[0].value() < 0.0 && profile.counter_avg[0].value() > 0.0)) {
        why = "E_1 trend = " + std::to_string(profile.trend_avg[0].value()) +
              ", counter = " + std::to_string(profile.counter_avg[0].value());
        return false;
    }
    return true;
}

bool horizon_suppression(std::string& why) {
    const auto series = generate(walk_spec(100000, 42, 1, 2));
    double prev = 2.0;
    for (std::int64_t horizon : {15, 60, 240}) {
        const auto shifts = shift_series(series, horizon);
        const double frac = double(zero_count(shifts)) / double(shifts.values.size());
        if (frac >= prev) {
            why = "S=0 fraction " + std::to_string(frac) + " at l_pr=" +
                  std::to_string(horizon) + " did not decrease";
            return false;
        }
        prev = frac;
    }
    return true;
}

bool spread_monotonicity(std::string& why) {
    const auto base = generate(walk_spec(20000, 7, 1, 0));
    std::int64_t prev = -1;
    for (Pips spread : {0, 2, 4, 8}) {
        PriceSeries series = base;
        for (std::size_t t = 0; t < series.size(); ++t) {
            series.bids[t] -= spread / 2;
            series.asks[t] += spread / 2;
        }
        const std::int64_t zeros = zero_count(shift_series(series, 15));
        if (zeros < prev) {
            why = "S=0 count dropped at spread " + std::to_string(spread);
            return false;
        }
        prev = zeros;
    }
    return true;
}

bool performance(std::string& why) {
    // recur:20 has l_N = 110; T chosen so exactly 1e5 aligned minutes remain
    const auto sample = aligned_walk(100125, 42, 2, 20, 15);
    if (sample.size() != 100000) {
        why = "expected 100000 aligned minutes, got " + std::to_string(sample.size());
        return false;
    }
    const auto hist = similarity_histogram(build_tuple_index(sample));
    const std::uint64_t total =
        std::accumulate(hist.pair_counts.begin(), hist.pair_counts.end(), std::uint64_t{0});
    if (total != 100000ull * 99999 / 2) {
        why = "pair conservation failed";
        return false;
    }
    try {
        similarity_histogram_naive(sample);
        why = "naive oracle accepted an oversized sample";
        return false;
    } catch (const OracleSizeError&) {
    }
    return true;
}

std::string g_cli_path;

bool determinism(std::string& why) {
    if (g_cli_path.empty()) {
        why = "CLI binary path not supplied";
        return false;
    }
    const fs::path base = fs::temp_directory_path() / "mtrend_acceptance";
    fs::remove_all(base);
    const std::string args =
        " all --synth random_walk:length=5000,seed=42,step=1,spread=2"
        " --scales recur:12 --horizons 15,60 --tuple-width 8 --out ";
    for (const char* sub : {"a", "b"}) {
        const std::string cmd =
            '"' + g_cli_path + '"' + args + (base / sub).string() + " > /dev/null";
        if (std::system(cmd.c_str()) != 0) {
            why = "CLI run failed";
            return false;
        }
    }
    const auto manifest_a = nlohmann::json::parse(slurp(base / "a" / "manifest.json"));
    const auto manifest_b = nlohmann::json::parse(slurp(base / "b" / "manifest.json"));
    if (manifest_a["outputs"] != manifest_b["outputs"]) {
        why = "manifest output digests differ";
        return false;
    }
    for (const auto& output : manifest_a["outputs"]) {
        const std::string name = output["file"];
        if (slurp(base / "a" / name) != slurp(base / "b" / name)) {
            why = name + " differs between runs";
            return false;
        }
    }
    if (manifest_a["outputs"].size() < 7) {  // series + 2x(matching, collective, similarity)
        why = "expected at least 7 outputs, got " +
              std::to_string(manifest_a["outputs"].size());
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];

    const std::vector<Check> checks = {
        {"schedule correctness (closed form, l_100 = 2550)", 0.001, schedule_correctness},
        {"matching antisymmetry, 50 seeds, exact", 5.0, antisymmetry},
        {"similarity grouped path == naive oracle, exact", 30.0, oracle_equivalence},
        {"null model: |E_i| < 0.02 and flat psi within 5 SE", 60.0, null_model},
        {"contrarian positive control: sign of E_1", 60.0, contrarian_control},
        {"S=0 fraction strictly decreases over l_pr 15/60/240", 30.0, horizon_suppression},
        {"S=0 count non-decreasing over spreads 0/2/4/8", 10.0, spread_monotonicity},
        {"grouped similarity at M=1e5, N=20 under 60 s; naive guarded", 60.0, performance},
        {"byte-identical reruns of the all command", 120.0, determinism},
    };

    int failures = 0;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        std::string why;
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = checks[k].body(why);
        } catch (const std::exception& e) {
            why = e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && elapsed > checks[k].budget_seconds) {
            ok = false;
            why = "over time budget of " + std::to_string(checks[k].budget_seconds) + " s";
        }
        std::printf("[%s] criterion %zu: %s (%.3f s)%s%s\n", ok ? "PASS" : "FAIL", k + 1,
                    checks[k].name.c_str(), elapsed, why.empty() ? "" : " -- ",
                    why.c_str());
        failures += !ok;
    }
    return failures == 0 ? 0 : 1;
}
