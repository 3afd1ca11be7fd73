#include "tda/dates.hpp"

#include <doctest.h>

using tda::Date;

TEST_CASE("ISO-8601 parsing round-trips") {
    const Date d = Date::parse("2020-02-29");
    CHECK(d.year == 2020);
    CHECK(d.month == 2);
    CHECK(d.day == 29);
    CHECK(d.to_string() == "2020-02-29");
}

TEST_CASE("invalid dates are rejected") {
    CHECK(!Date::try_parse("2021-02-29"));
    CHECK(!Date::try_parse("2020-13-01"));
    CHECK(!Date::try_parse("2020-1-01"));
    CHECK(!Date::try_parse("20200101"));
    CHECK(!Date::try_parse("01/02/2020"));
    CHECK_THROWS_AS(Date::parse("not a date"), tda::BadDate);
}

TEST_CASE("serial arithmetic is consistent") {
    const Date a = Date::parse("2020-01-01");
    const Date b = Date::parse("2020-01-31");
    CHECK(b.serial() - a.serial() == 30);
    CHECK(Date::from_serial(a.serial() + 30) == b);
    CHECK(a < b);
}
