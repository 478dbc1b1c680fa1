#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mtrend/ingest.hpp"
#include "mtrend/synth.hpp"

namespace mtrend {

inline constexpr const char* kVersion = "0.1.0";

// One reproducible figure-data run. Exactly one of input_path /
// generator must be set.
struct RunConfig {
    std::string command;  // resample | synth | matching | collective | similarity | all
    std::optional<std::string> input_path;
    std::optional<GeneratorSpec> generator;
    TickFormat tick_format;
    bool input_is_series = false;  // input_path already holds a minute-grid CSV
    GapPolicy gap_policy = GapPolicy::carry_forward();

    std::string schedule_spec = "recur:100";
    std::vector<std::int64_t> horizons = {15, 60, 240};
    std::optional<std::vector<double>> epsilon_grid;  // nullopt = auto from N
    std::vector<int> tuple_widths = {16};             // similarity sweep
    std::optional<std::size_t> subsample_size;
    std::string out_dir = ".";
};

// Executes the command, writes the CSVs plus manifest.json into out_dir.
// Returns 0 on success. Undefined statistics are recorded in the manifest
// and do not fail the run.
int run(const RunConfig& config);

}  // namespace mtrend
