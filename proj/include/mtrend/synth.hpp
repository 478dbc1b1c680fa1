#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "mtrend/price_series.hpp"

namespace mtrend {

// splitmix64 (Steele/Lea/Flood, public domain). Fixed here so golden
// outputs are identical across platforms and standard libraries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // Fair coin: +1 or -1.
    int sign() { return next() & 1u ? +1 : -1; }

private:
    std::uint64_t state_;
};

// Seedable integer-pip mid-price dynamics with a symmetric spread.
// bid = mid - spread/2, ask = mid + spread/2 (spread must be even).
struct GeneratorSpec {
    enum class Kind { random_walk, drift, mean_revert };
    Kind kind = Kind::random_walk;
    std::int64_t length = 0;         // minutes, >= 2
    std::uint64_t seed = 0;
    Pips step = 1;                   // pips per minute
    Pips spread = 0;                 // pips, even, >= 0
    Pips drift = 0;                  // pips per minute (kind = drift)
    double reversion = 0.0;          // fraction in (0, 1] (kind = mean_revert)
    Pips anchor_price = 0;           // pips (kind = mean_revert)
    Pips initial_price = 120000;     // pips
    int pip_digits = 5;

    std::string canonical() const;  // round-trips through parse_generator_spec
};

// "kind:key=value,key=value,..." with keys length, seed, step, spread,
// drift, reversion, anchor, start, digits.
GeneratorSpec parse_generator_spec(std::string_view spec);

// Deterministic for a fixed spec: bit-identical series across runs and
// platforms. Mid prices are floored so bids stay positive.
PriceSeries generate(const GeneratorSpec& spec);

}  // namespace mtrend
