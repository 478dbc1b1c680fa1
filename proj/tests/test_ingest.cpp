#include <doctest.h>

#include <sstream>

#include "mtrend/errors.hpp"
#include "mtrend/ingest.hpp"

using namespace mtrend;

namespace {

std::vector<TickRecord> parse(const std::string& text, TickFormat format = {}) {
    std::istringstream in(text);
    return parse_ticks(in, format);
}

TickRecord tick(std::int64_t ts, Pips bid, Pips ask) { return {ts, bid, ask}; }

}  // namespace

TEST_CASE("single well-formed row") {
    auto ticks = parse("1096588800,1.2000,1.2002\n");
    REQUIRE(ticks.size() == 1);
    CHECK(ticks[0].timestamp == 1096588800);
    CHECK(ticks[0].bid == 120000);
    CHECK(ticks[0].ask == 120020);
}

TEST_CASE("empty stream is an error") {
    CHECK_THROWS_AS(parse(""), EmptyInputError);
    CHECK_THROWS_AS(parse("\n\n"), EmptyInputError);
}

TEST_CASE("crossed quotes are rejected with the line number") {
    try {
        parse("100,1.2,1.21\n200,1.3,1.2\n");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("malformed rows carry the line number") {
    try {
        parse("100,1.2,1.21\nbogus\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse("100,1.2\n"), ParseError);  // missing column
}

TEST_CASE("out-of-order rows are sorted stably") {
    auto ticks = parse("200,1.3,1.4\n100,1.1,1.2\n200,1.5,1.6\n");
    REQUIRE(ticks.size() == 3);
    CHECK(ticks[0].timestamp == 100);
    CHECK(ticks[1].bid == 130000);  // first 200s row keeps its position
    CHECK(ticks[2].bid == 150000);
}

TEST_CASE("alternative delimiters, columns and ISO timestamps") {
    TickFormat format;
    format.delimiter = '\t';
    format.timestamp_col = 2;
    format.bid_col = 0;
    format.ask_col = 1;
    format.time_format = TimeFormat::iso8601;
    format.skip_header = true;
    auto ticks = parse("bid\task\ttime\n1.2000\t1.2002\t1970-01-01T00:02:00Z\n", format);
    REQUIRE(ticks.size() == 1);
    CHECK(ticks[0].timestamp == 120);
    auto epoch = parse("1.1\t1.2\t2004-10-01 00:00:00\n", [&] {
        format.skip_header = false;
        return format;
    }());
    CHECK(epoch[0].timestamp == 1096588800);
}

TEST_CASE("last observation before the boundary wins") {
    const std::vector<TickRecord> ticks = {tick(10, 120000, 120002), tick(50, 120001, 120003)};
    auto result = resample(ticks, GapPolicy::carry_forward());
    REQUIRE(result.series.size() == 1);
    CHECK(result.series.anchor_minute == 1);
    CHECK(result.series.bids[0] == 120001);
    CHECK(result.series.asks[0] == 120003);
    CHECK(result.series.filled[0] == 0);
}

TEST_CASE("empty minutes carry the previous slot forward") {
    const std::vector<TickRecord> ticks = {tick(10, 120000, 120002), tick(150, 120005, 120007)};
    auto result = resample(ticks, GapPolicy::carry_forward());
    REQUIRE(result.series.size() == 3);  // minutes 1, 2, 3
    CHECK(result.series.bids[0] == 120000);
    CHECK(result.series.filled[1] == 1);
    CHECK(result.series.bids[1] == 120000);  // copy of slot 0
    CHECK(result.series.filled[2] == 0);
    CHECK(result.series.bids[2] == 120005);
}

TEST_CASE("several ticks inside one minute collapse to the final one") {
    const std::vector<TickRecord> ticks = {tick(10, 1, 2), tick(20, 3, 4), tick(30, 5, 6)};
    auto result = resample(ticks, GapPolicy::carry_forward());
    REQUIRE(result.series.size() == 1);
    CHECK(result.series.bids[0] == 5);
    CHECK(result.series.asks[0] == 6);
}

TEST_CASE("resampling a minute-aligned stream is the identity") {
    std::vector<TickRecord> ticks;
    for (int m = 1; m <= 20; ++m) ticks.push_back(tick(m * 60, 100 + m, 102 + m));
    auto result = resample(ticks, GapPolicy::carry_forward());
    REQUIRE(result.series.size() == 20);
    for (std::size_t t = 0; t < 20; ++t) {
        CHECK(result.series.filled[t] == 0);
        CHECK(result.series.bids[t] == ticks[t].bid);
        CHECK(result.series.asks[t] == ticks[t].ask);
    }
}

TEST_CASE("resampling never invents prices") {
    std::vector<TickRecord> ticks;
    std::uint64_t x = 12345;
    std::int64_t ts = 7;
    for (int k = 0; k < 200; ++k) {
        x = x * 6364136223846793005ull + 1442695040888963407ull;
        ts += 1 + (x >> 33) % 200;
        const Pips bid = 100000 + static_cast<Pips>(x % 50);
        ticks.push_back(tick(ts, bid, bid + 2));
    }
    auto result = resample(ticks, GapPolicy::carry_forward());
    for (std::size_t t = 0; t < result.series.size(); ++t) {
        bool found = false;
        for (const auto& tk : ticks)
            found |= tk.bid == result.series.bids[t] && tk.ask == result.series.asks[t];
        CHECK(found);
    }
}

TEST_CASE("strict policy reports the first gap") {
    const std::vector<TickRecord> ticks = {tick(10, 1, 2), tick(150, 3, 4)};
    CHECK_THROWS_AS(resample(ticks, GapPolicy::strict()), GapError);
}

TEST_CASE("long gaps split the series; the longest segment survives") {
    std::vector<TickRecord> ticks;
    for (int m = 1; m <= 5; ++m) ticks.push_back(tick(m * 60, 10 + m, 12 + m));
    // 10-minute silence, then a longer segment
    for (int m = 16; m <= 30; ++m) ticks.push_back(tick(m * 60, 50 + m, 52 + m));
    auto result = resample(ticks, GapPolicy::carry_forward(3));
    CHECK(result.segments == 2);
    CHECK(result.series.anchor_minute == 16);
    CHECK(result.series.size() == 15);
    CHECK(result.discarded_slots == 15);  // 5 kept slots + 10 filled ones dropped
    for (std::size_t t = 0; t < result.series.size(); ++t) CHECK(result.series.filled[t] == 0);
}
