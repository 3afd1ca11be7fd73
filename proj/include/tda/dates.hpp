#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tda {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadDate : Error {
    using Error::Error;
};

// Calendar day. Parsing accepts ISO-8601 (YYYY-MM-DD) only.
struct Date {
    std::int16_t year = 0;
    std::int8_t month = 0;
    std::int8_t day = 0;

    auto operator<=>(const Date&) const = default;

    bool valid() const;
    std::string to_string() const;

    // Days since 1970-01-01; usable for gap arithmetic.
    std::int64_t serial() const;

    static Date parse(std::string_view iso);
    static std::optional<Date> try_parse(std::string_view iso);
    static Date from_serial(std::int64_t days_since_epoch);
};

// A dated scalar observation (return, index value, ...).
struct DatedValue {
    Date date;
    double value = 0.0;
};

} // namespace tda
