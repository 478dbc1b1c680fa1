#include "mtrend/run.hpp"

#include <ctime>
#include <optional>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mtrend/csv_io.hpp"
#include "mtrend/digest.hpp"
#include "mtrend/errors.hpp"
#include "mtrend/stats.hpp"

namespace mtrend {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

struct RunContext {
    fs::path out_dir;
    json outputs = json::array();
    json notes = json::array();

    // Writes a CSV through `emit` and records rows + digest in the manifest.
    template <typename Emit>
    void write_csv(const std::string& name, Emit&& emit) {
        const fs::path path = out_dir / name;
        std::ostringstream buffer;
        const std::size_t rows = emit(buffer);
        const std::string bytes = buffer.str();
        std::ofstream file(path, std::ios::binary);
        if (!file) throw Error("cannot open output file: " + path.string());
        file << bytes;
        outputs.push_back({{"file", name},
                           {"rows", rows},
                           {"digest", "sha256:" + sha256_hex(bytes)}});
    }

    void note(const std::string& message) { notes.push_back(message); }
};

std::string utc_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[24];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct LoadedInput {
    PriceSeries series;
    std::string kind;
    std::string source;
    std::string digest;
    std::int64_t discarded_slots = 0;
    std::int64_t segments = 1;
};

LoadedInput load_input(const RunConfig& config) {
    LoadedInput input;
    if (config.generator) {
        input.series = generate(*config.generator);
        input.kind = "synth";
        input.source = config.generator->canonical();
        input.digest = "sha256:" + sha256_hex(input.source);
        return input;
    }
    if (!config.input_path) throw ValidationError("no input path and no generator spec");
    input.source = *config.input_path;
    input.digest = "sha256:" + sha256_file(*config.input_path);
    std::ifstream file(*config.input_path, std::ios::binary);
    if (!file) throw Error("cannot open input file: " + *config.input_path);
    if (config.input_is_series) {
        input.kind = "series";
        input.series = read_series_csv(file, config.tick_format.pip_digits);
    } else {
        input.kind = "ticks";
        const auto ticks = parse_ticks(file, config.tick_format);
        auto result = resample(ticks, config.gap_policy);
        input.series = std::move(result.series);
        input.discarded_slots = result.discarded_slots;
        input.segments = result.segments;
    }
    return input;
}

void run_matching(RunContext& ctx, const RunConfig& config, const PriceSeries& series) {
    const ScaleSchedule schedule = ScaleSchedule::parse(config.schedule_spec);
    std::optional<TrendMatrix> built;
    try {
        built = trend_matrix(series, schedule);
    } catch (const InsufficientDataError& e) {
        ctx.note(std::string("matching: ") + e.what());
        return;
    }
    const TrendMatrix& matrix = *built;
    for (std::int64_t horizon : config.horizons) {
        const std::string name = "matching_lpr" + std::to_string(horizon) + ".csv";
        try {
            const AlignedSample sample = align(matrix, shift_series(series, horizon));
            const MatchingProfile profile = matching_profile(sample);
            ctx.write_csv(name, [&](std::ostream& out) {
                return write_matching_csv(out, schedule, profile);
            });
        } catch (const UndefinedStatisticError& e) {
            ctx.note(name + ": " + e.what());
        } catch (const InsufficientDataError& e) {
            ctx.note(name + ": " + e.what());
        }
    }
}

void run_collective(RunContext& ctx, const RunConfig& config, const PriceSeries& series) {
    const ScaleSchedule schedule = ScaleSchedule::parse(config.schedule_spec);
    std::optional<TrendMatrix> built;
    try {
        built = trend_matrix(series, schedule);
    } catch (const InsufficientDataError& e) {
        ctx.note(std::string("collective: ") + e.what());
        return;
    }
    const TrendMatrix& matrix = *built;
    const std::vector<double> grid = config.epsilon_grid
                                         ? *config.epsilon_grid
                                         : default_epsilon_grid(schedule.size());
    for (std::int64_t horizon : config.horizons) {
        const std::string name = "collective_lpr" + std::to_string(horizon) + ".csv";
        try {
            const AlignedSample sample = align(matrix, shift_series(series, horizon));
            const CollectiveCurve curve = collective_response(sample, grid);
            ctx.write_csv(name, [&](std::ostream& out) {
                return write_collective_csv(out, curve);
            });
        } catch (const InsufficientDataError& e) {
            ctx.note(name + ": " + e.what());
        }
    }
}

void run_similarity(RunContext& ctx, const RunConfig& config, const PriceSeries& series) {
    for (int width : config.tuple_widths) {
        const ScaleSchedule schedule = ScaleSchedule::recurrence(width);
        std::optional<TrendMatrix> built;
        try {
            built = trend_matrix(series, schedule);
        } catch (const InsufficientDataError& e) {
            ctx.note("similarity N=" + std::to_string(width) + ": " + e.what());
            continue;
        }
        const TrendMatrix& matrix = *built;
        for (std::int64_t horizon : config.horizons) {
            const std::string name = "similarity_N" + std::to_string(width) + "_lpr" +
                                     std::to_string(horizon) + ".csv";
            try {
                AlignedSample sample = align(matrix, shift_series(series, horizon));
                if (config.subsample_size) {
                    sample = subsample(sample, *config.subsample_size);
                    ctx.note(name + ": subsampled to " + std::to_string(sample.size()) +
                             " instants");
                }
                if (sample.size() == 0) {
                    ctx.note(name + ": empty aligned sample");
                    continue;
                }
                const SimilarityHistogram hist = similarity_histogram(build_tuple_index(sample));
                ctx.write_csv(name, [&](std::ostream& out) {
                    return write_similarity_csv(out, hist);
                });
            } catch (const InsufficientDataError& e) {
                ctx.note(name + ": " + e.what());
            }
        }
    }
}

json config_json(const RunConfig& config) {
    json cfg;
    cfg["command"] = config.command;
    cfg["schedule"] = config.schedule_spec;
    cfg["horizons"] = config.horizons;
    if (config.epsilon_grid)
        cfg["eps_grid"] = *config.epsilon_grid;
    else
        cfg["eps_grid"] = "auto";
    cfg["tuple_widths"] = config.tuple_widths;
    if (config.subsample_size) cfg["subsample"] = *config.subsample_size;
    if (config.gap_policy.kind == GapPolicy::Kind::strict)
        cfg["gap_policy"] = "strict";
    else
        cfg["gap_policy"] = "carry_forward:" + std::to_string(config.gap_policy.max_gap_minutes);
    return cfg;
}

}  // namespace

int run(const RunConfig& config) {
    if (config.input_path.has_value() == config.generator.has_value())
        throw ValidationError("exactly one of --input and --synth must be given");

    RunContext ctx;
    ctx.out_dir = config.out_dir;
    fs::create_directories(ctx.out_dir);

    const LoadedInput input = load_input(config);
    if (input.discarded_slots > 0)
        ctx.note("resample: discarded " + std::to_string(input.discarded_slots) +
                 " slots across " + std::to_string(input.segments) + " segments");

    const bool want_series =
        config.command == "resample" || config.command == "synth" || config.command == "all";
    if (want_series)
        ctx.write_csv("series.csv",
                      [&](std::ostream& out) { return write_series_csv(out, input.series); });
    if (config.command == "matching" || config.command == "all")
        run_matching(ctx, config, input.series);
    if (config.command == "collective" || config.command == "all")
        run_collective(ctx, config, input.series);
    if (config.command == "similarity" || config.command == "all")
        run_similarity(ctx, config, input.series);

    json manifest;
    manifest["command"] = config.command;
    manifest["version"] = kVersion;
    manifest["generated_at"] = utc_now();
    manifest["config"] = config_json(config);
    manifest["input"] = {{"kind", input.kind},
                         {"source", input.source},
                         {"digest", input.digest},
                         {"series_length", input.series.size()}};
    manifest["outputs"] = ctx.outputs;
    manifest["notes"] = ctx.notes;

    std::ofstream out(ctx.out_dir / "manifest.json", std::ios::binary);
    if (!out) throw Error("cannot write manifest");
    out << manifest.dump(2) << '\n';
    return 0;
}

}  // namespace mtrend
