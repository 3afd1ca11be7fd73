#pragma once

#include "tda/dates.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tda {

struct MalformedRow : Error {
    using Error::Error;
};
struct NonPositivePrice : Error {
    using Error::Error;
};
struct DuplicateDate : Error {
    using Error::Error;
};
struct EmptyInput : Error {
    using Error::Error;
};
struct TooShort : Error {
    using Error::Error;
};
struct Misalignment : Error {
    using Error::Error;
};

struct PricePoint {
    Date date;
    double close = 0.0;
};

// Dated close prices, strictly increasing dates, all closes > 0.
struct PriceSeries {
    std::string asset_id;
    std::vector<PricePoint> observations;

    std::size_t size() const { return observations.size(); }
};

// Dated returns; one observation fewer than the source prices, dated by the
// later day of each pair.
struct ReturnSeries {
    std::string asset_id;
    std::vector<DatedValue> observations;

    std::size_t size() const { return observations.size(); }
    std::vector<double> values() const;
    std::vector<Date> dates() const;
};

struct CsvSchema {
    std::string date_column = "date";
    std::string close_column = "close";
    char delimiter = ',';
    // Missing/empty/NaN closes are a hard error unless set; then gaps are
    // filled from the prior close (in date order).
    bool forward_fill = false;
};

// Parses `date,close` style CSV text (header row required). Rows are sorted
// by date; duplicate dates are rejected.
PriceSeries parse_price_csv(std::istream& in, const CsvSchema& schema = {},
                            std::string asset_id = "");

ReturnSeries log_returns(const PriceSeries& p);
ReturnSeries simple_returns(const PriceSeries& p);

// Restricts all series to their common dates (inner join). Throws
// EmptyInput if the intersection is empty.
std::vector<ReturnSeries> align_series(const std::vector<ReturnSeries>& series);

} // namespace tda
