#include <doctest.h>

#include "mtrend/errors.hpp"
#include "mtrend/pips.hpp"

using namespace mtrend;

TEST_CASE("decimal prices scale exactly to pips") {
    CHECK(parse_price("1.2000", 5) == 120000);
    CHECK(parse_price("1.20002", 5) == 120002);
    CHECK(parse_price("1.2", 5) == 120000);
    CHECK(parse_price("2", 5) == 200000);
    CHECK(parse_price("0.00001", 5) == 1);
}

TEST_CASE("malformed or out-of-domain prices are rejected") {
    CHECK_THROWS_AS(parse_price("", 5), ValidationError);
    CHECK_THROWS_AS(parse_price("1.200001", 5), ValidationError);  // 6th digit
    CHECK_THROWS_AS(parse_price("-1.2", 5), ValidationError);
    CHECK_THROWS_AS(parse_price("1.2e3", 5), ValidationError);
    CHECK_THROWS_AS(parse_price("0", 5), ValidationError);
    CHECK_THROWS_AS(parse_price(".", 5), ValidationError);
}

TEST_CASE("format_price is the inverse of parse_price") {
    CHECK(format_price(120000, 5) == "1.20000");
    CHECK(format_price(1, 5) == "0.00001");
    CHECK(format_price(parse_price("1.23456", 5), 5) == "1.23456");
    CHECK(format_price(42, 0) == "42");
}
