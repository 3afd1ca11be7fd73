#include "tda/dates.hpp"

#include <charconv>

namespace tda {

namespace {

bool parse_int(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

bool Date::valid() const {
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{static_cast<unsigned>(month)},
                                          std::chrono::day{static_cast<unsigned>(day)}};
    return ymd.ok();
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", static_cast<int>(year),
                  static_cast<int>(month), static_cast<int>(day));
    return buf;
}

std::int64_t Date::serial() const {
    const std::chrono::year_month_day ymd{std::chrono::year{year},
                                          std::chrono::month{static_cast<unsigned>(month)},
                                          std::chrono::day{static_cast<unsigned>(day)}};
    return std::chrono::sys_days{ymd}.time_since_epoch().count();
}

std::optional<Date> Date::try_parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
    int y = 0, m = 0, d = 0;
    if (!parse_int(iso.substr(0, 4), y) || !parse_int(iso.substr(5, 2), m) ||
        !parse_int(iso.substr(8, 2), d))
        return std::nullopt;
    Date date{static_cast<std::int16_t>(y), static_cast<std::int8_t>(m),
              static_cast<std::int8_t>(d)};
    if (!date.valid()) return std::nullopt;
    return date;
}

Date Date::parse(std::string_view iso) {
    auto d = try_parse(iso);
    if (!d) throw BadDate("not an ISO-8601 calendar day: '" + std::string(iso) + "'");
    return *d;
}

Date Date::from_serial(std::int64_t days_since_epoch) {
    const std::chrono::year_month_day ymd{
        std::chrono::sys_days{std::chrono::days{days_since_epoch}}};
    return Date{static_cast<std::int16_t>(static_cast<int>(ymd.year())),
                static_cast<std::int8_t>(static_cast<unsigned>(ymd.month())),
                static_cast<std::int8_t>(static_cast<unsigned>(ymd.day()))};
}

} // namespace tda
