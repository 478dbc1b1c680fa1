#include "mtrend/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "mtrend/errors.hpp"

namespace mtrend {
namespace {

const char* kind_name(GeneratorSpec::Kind kind) {
    switch (kind) {
        case GeneratorSpec::Kind::random_walk: return "random_walk";
        case GeneratorSpec::Kind::drift: return "drift";
        case GeneratorSpec::Kind::mean_revert: return "mean_revert";
    }
    return "?";
}

void validate(const GeneratorSpec& spec) {
    if (spec.length < 2) throw ValidationError("generator length must be >= 2");
    if (spec.spread < 0 || spec.spread % 2 != 0)
        throw ValidationError("spread must be a non-negative even number of pips");
    if (spec.step < 0) throw ValidationError("step must be non-negative");
    if (spec.initial_price <= 0) throw ValidationError("initial price must be positive");
    if (spec.kind == GeneratorSpec::Kind::mean_revert) {
        if (!(spec.reversion > 0.0 && spec.reversion <= 1.0))
            throw ValidationError("reversion strength must lie in (0, 1]");
        if (spec.anchor_price <= 0) throw ValidationError("anchor price must be positive");
    }
}

}  // namespace

std::string GeneratorSpec::canonical() const {
    std::string out = kind_name(kind);
    out += ":length=" + std::to_string(length);
    out += ",seed=" + std::to_string(seed);
    out += ",step=" + std::to_string(step);
    out += ",spread=" + std::to_string(spread);
    if (kind == Kind::drift) out += ",drift=" + std::to_string(drift);
    if (kind == Kind::mean_revert) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", reversion);
        out += ",reversion=";
        out += buf;
        out += ",anchor=" + std::to_string(anchor_price);
    }
    out += ",start=" + std::to_string(initial_price);
    out += ",digits=" + std::to_string(pip_digits);
    return out;
}

GeneratorSpec parse_generator_spec(std::string_view text) {
    GeneratorSpec spec;
    const std::size_t colon = text.find(':');
    const std::string_view kind = text.substr(0, colon);
    if (kind == "random_walk")
        spec.kind = GeneratorSpec::Kind::random_walk;
    else if (kind == "drift")
        spec.kind = GeneratorSpec::Kind::drift;
    else if (kind == "mean_revert")
        spec.kind = GeneratorSpec::Kind::mean_revert;
    else
        throw ValidationError("unknown generator kind: " + std::string(kind));

    std::size_t start = colon == std::string_view::npos ? text.size() : colon + 1;
    while (start < text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view pair = text.substr(start, end - start);
        const std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos)
            throw ValidationError("malformed generator option: " + std::string(pair));
        const std::string_view key = pair.substr(0, eq);
        const std::string value(pair.substr(eq + 1));
        auto as_int = [&] {
            std::int64_t v = 0;
            auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc{} || ptr != value.data() + value.size())
                throw ValidationError("malformed integer option " + std::string(key) + "=" + value);
            return v;
        };
        if (key == "length" || key == "T")
            spec.length = as_int();
        else if (key == "seed")
            spec.seed = static_cast<std::uint64_t>(as_int());
        else if (key == "step")
            spec.step = as_int();
        else if (key == "spread")
            spec.spread = as_int();
        else if (key == "drift")
            spec.drift = as_int();
        else if (key == "reversion")
            spec.reversion = std::stod(value);
        else if (key == "anchor")
            spec.anchor_price = as_int();
        else if (key == "start")
            spec.initial_price = as_int();
        else if (key == "digits")
            spec.pip_digits = static_cast<int>(as_int());
        else
            throw ValidationError("unknown generator option: " + std::string(key));
        start = end + 1;
    }
    validate(spec);
    return spec;
}

PriceSeries generate(const GeneratorSpec& spec) {
    validate(spec);
    SplitMix64 rng(spec.seed);
    const Pips half_spread = spec.spread / 2;
    const Pips floor_mid = 1 + half_spread;  // keeps bid >= 1 pip

    PriceSeries series;
    series.pip_digits = spec.pip_digits;
    series.bids.reserve(static_cast<std::size_t>(spec.length));
    series.asks.reserve(static_cast<std::size_t>(spec.length));
    series.filled.assign(static_cast<std::size_t>(spec.length), 0);

    Pips mid = std::max(spec.initial_price, floor_mid);
    for (std::int64_t t = 0; t < spec.length; ++t) {
        series.bids.push_back(mid - half_spread);
        series.asks.push_back(mid + half_spread);
        switch (spec.kind) {
            case GeneratorSpec::Kind::random_walk:
                mid += rng.sign() * spec.step;
                break;
            case GeneratorSpec::Kind::drift:
                mid += spec.drift + rng.sign() * spec.step;
                break;
            case GeneratorSpec::Kind::mean_revert:
                mid += static_cast<Pips>(std::llround(
                           spec.reversion * static_cast<double>(spec.anchor_price - mid))) +
                       rng.sign() * spec.step;
                break;
        }
        mid = std::max(mid, floor_mid);
    }
    return series;
}

}  // namespace mtrend
