#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mtrend/errors.hpp"
#include "mtrend/run.hpp"

namespace {

struct CliOptions {
    std::string input;
    std::string synth;
    std::string scales = "recur:100";
    std::vector<std::int64_t> horizons = {15, 60, 240};
    std::string eps_grid = "auto";
    std::vector<int> tuple_widths;
    std::size_t subsample = 0;
    std::string out_dir = ".";
    std::string gap = "carry:120";
    bool input_is_series = false;
    char delimiter = ',';
    std::vector<int> columns = {0, 1, 2};
    std::string time_format = "epoch";
    int pip_digits = 5;
    bool skip_header = false;
};

void add_common(CLI::App* cmd, CliOptions& opt, bool analysis) {
    cmd->add_option("--input", opt.input, "Tick CSV/TSV input file");
    cmd->add_option("--synth", opt.synth,
                    "Generator spec, e.g. random_walk:length=100000,seed=42,step=1,spread=2");
    cmd->add_option("--out", opt.out_dir, "Output directory")->capture_default_str();
    cmd->add_flag("--input-series", opt.input_is_series,
                  "Treat --input as an already resampled minute-grid series CSV");
    cmd->add_option("--delimiter", opt.delimiter, "Tick file field delimiter");
    cmd->add_option("--columns", opt.columns,
                    "Column indices: timestamp bid ask (0-based)")
        ->expected(3);
    cmd->add_option("--time-format", opt.time_format, "epoch | iso")
        ->check(CLI::IsMember({"epoch", "iso"}));
    cmd->add_option("--pip-digits", opt.pip_digits, "Fractional price digits")
        ->capture_default_str();
    cmd->add_flag("--skip-header", opt.skip_header, "Skip the first input line");
    cmd->add_option("--gap", opt.gap, "Gap policy: carry:MAXMIN or strict")
        ->capture_default_str();
    if (analysis) {
        cmd->add_option("--scales", opt.scales, "Schedule: recur:N or explicit list 1,5,30")
            ->capture_default_str();
        cmd->add_option("--horizons", opt.horizons, "Holding horizons l_pr in minutes")
            ->delimiter(',');
        cmd->add_option("--eps-grid", opt.eps_grid, "auto or comma-separated thresholds");
        cmd->add_option("--tuple-width", opt.tuple_widths,
                        "Tuple widths N for the similarity histogram")
            ->delimiter(',');
        cmd->add_option("--subsample", opt.subsample,
                        "Uniform time-subsample size for similarity pairs");
    }
}

mtrend::RunConfig to_config(const std::string& command, const CliOptions& opt) {
    mtrend::RunConfig config;
    config.command = command;
    if (!opt.input.empty()) config.input_path = opt.input;
    if (!opt.synth.empty()) config.generator = mtrend::parse_generator_spec(opt.synth);
    config.input_is_series = opt.input_is_series;
    config.tick_format.delimiter = opt.delimiter;
    config.tick_format.timestamp_col = opt.columns[0];
    config.tick_format.bid_col = opt.columns[1];
    config.tick_format.ask_col = opt.columns[2];
    config.tick_format.time_format = opt.time_format == "iso"
                                         ? mtrend::TimeFormat::iso8601
                                         : mtrend::TimeFormat::epoch_seconds;
    config.tick_format.pip_digits = opt.pip_digits;
    config.tick_format.skip_header = opt.skip_header;
    if (opt.gap == "strict")
        config.gap_policy = mtrend::GapPolicy::strict();
    else if (opt.gap.rfind("carry:", 0) == 0)
        config.gap_policy = mtrend::GapPolicy::carry_forward(std::stoll(opt.gap.substr(6)));
    else
        throw mtrend::ValidationError("unknown gap policy: " + opt.gap);
    config.schedule_spec = opt.scales;
    config.horizons = opt.horizons;
    if (opt.eps_grid != "auto") {
        std::vector<double> grid;
        std::size_t start = 0;
        while (start <= opt.eps_grid.size()) {
            std::size_t end = opt.eps_grid.find(',', start);
            if (end == std::string::npos) end = opt.eps_grid.size();
            grid.push_back(std::stod(opt.eps_grid.substr(start, end - start)));
            start = end + 1;
        }
        config.epsilon_grid = std::move(grid);
    }
    if (!opt.tuple_widths.empty())
        config.tuple_widths = opt.tuple_widths;
    else if (command == "all")
        config.tuple_widths = {12, 16, 20};  // the paper-motivated sweep range
    if (opt.subsample > 0) config.subsample_size = opt.subsample;
    config.out_dir = opt.out_dir;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-scale trend statistics for FX minute data"};
    app.require_subcommand(1);

    CliOptions opt;
    add_common(app.add_subcommand("resample", "Resample ticks onto the 1-minute grid"), opt,
               false);
    add_common(app.add_subcommand("synth", "Generate a synthetic bid/ask series"), opt, false);
    add_common(app.add_subcommand("matching", "Per-scale matching averages"), opt, true);
    add_common(app.add_subcommand("collective", "Collective response curve T(eps)"), opt, true);
    add_common(app.add_subcommand("similarity", "Tuple similarity histogram psi(r)"), opt, true);
    add_common(app.add_subcommand("all", "Full figure-data pipeline"), opt, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return mtrend::run(to_config(app.get_subcommands().front()->get_name(), opt));
    } catch (const mtrend::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
