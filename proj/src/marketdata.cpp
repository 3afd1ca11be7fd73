#include "tda/marketdata.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>

namespace tda {

std::vector<double> ReturnSeries::values() const {
    std::vector<double> v;
    v.reserve(observations.size());
    for (const auto& o : observations) v.push_back(o.value);
    return v;
}

std::vector<Date> ReturnSeries::dates() const {
    std::vector<Date> v;
    v.reserve(observations.size());
    for (const auto& o : observations) v.push_back(o.date);
    return v;
}

namespace {

std::vector<std::string> split_row(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string cur;
    std::istringstream ls(line);
    while (std::getline(ls, cur, delim)) {
        while (!cur.empty() && (cur.back() == '\r' || cur.back() == ' ')) cur.pop_back();
        std::size_t start = 0;
        while (start < cur.size() && cur[start] == ' ') ++start;
        fields.push_back(cur.substr(start));
    }
    if (!line.empty() && line.back() == delim) fields.emplace_back();
    return fields;
}

bool parse_close(const std::string& s, double& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

} // namespace

PriceSeries parse_price_csv(std::istream& in, const CsvSchema& schema, std::string asset_id) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyInput("empty price CSV");
    const auto header = split_row(line, schema.delimiter);

    std::size_t date_col = header.size(), close_col = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == schema.date_column) date_col = i;
        if (header[i] == schema.close_column) close_col = i;
    }
    if (date_col == header.size() || close_col == header.size())
        throw MalformedRow("header lacks required columns '" + schema.date_column + "'/'" +
                           schema.close_column + "'");

    struct RawRow {
        Date date;
        double close;
        bool missing;
    };
    std::vector<RawRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        const auto fields = split_row(line, schema.delimiter);
        if (fields.size() <= std::max(date_col, close_col))
            throw MalformedRow("line " + std::to_string(line_no) + ": expected at least " +
                               std::to_string(std::max(date_col, close_col) + 1) + " fields");
        auto date = Date::try_parse(fields[date_col]);
        if (!date)
            throw MalformedRow("line " + std::to_string(line_no) + ": bad date '" +
                               fields[date_col] + "'");

        const std::string& cell = fields[close_col];
        double close = 0.0;
        bool missing = cell.empty() || cell == "nan" || cell == "NaN" || cell == "NA";
        if (!missing) {
            if (!parse_close(cell, close))
                throw MalformedRow("line " + std::to_string(line_no) + ": bad close '" + cell +
                                   "'");
            if (std::isnan(close)) missing = true;
        }
        if (missing && !schema.forward_fill)
            throw MalformedRow("line " + std::to_string(line_no) +
                               ": missing close (rerun with forward-fill to accept gaps)");
        if (!missing && close <= 0.0)
            throw NonPositivePrice("line " + std::to_string(line_no) + ": close " +
                                   std::to_string(close) + " on " + date->to_string());
        rows.push_back({*date, close, missing});
    }
    if (rows.empty()) throw EmptyInput("price CSV has a header but no data rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const RawRow& a, const RawRow& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].date == rows[i - 1].date)
            throw DuplicateDate("duplicate date " + rows[i].date.to_string());

    PriceSeries out;
    out.asset_id = std::move(asset_id);
    out.observations.reserve(rows.size());
    double last_close = 0.0;
    bool have_close = false;
    for (const auto& r : rows) {
        double close = r.close;
        if (r.missing) {
            if (!have_close)
                throw MalformedRow("cannot forward-fill: first close at " + r.date.to_string() +
                                   " is missing");
            close = last_close;
        }
        out.observations.push_back({r.date, close});
        last_close = close;
        have_close = true;
    }
    if (out.observations.size() < 2)
        throw TooShort("price series needs at least 2 observations, got " +
                       std::to_string(out.observations.size()));
    return out;
}

namespace {

template <typename F>
ReturnSeries returns_impl(const PriceSeries& p, F step) {
    if (p.observations.size() < 2)
        throw TooShort("need at least 2 prices to form returns, got " +
                       std::to_string(p.observations.size()));
    ReturnSeries out;
    out.asset_id = p.asset_id;
    out.observations.reserve(p.observations.size() - 1);
    for (std::size_t i = 1; i < p.observations.size(); ++i) {
        const double r = step(p.observations[i - 1].close, p.observations[i].close);
        out.observations.push_back({p.observations[i].date, r});
    }
    return out;
}

} // namespace

ReturnSeries log_returns(const PriceSeries& p) {
    return returns_impl(p, [](double prev, double cur) { return std::log(cur / prev); });
}

ReturnSeries simple_returns(const PriceSeries& p) {
    return returns_impl(p, [](double prev, double cur) { return cur / prev - 1.0; });
}

std::vector<ReturnSeries> align_series(const std::vector<ReturnSeries>& series) {
    if (series.empty()) return {};
    std::set<Date> common;
    for (const auto& o : series.front().observations) common.insert(o.date);
    for (std::size_t i = 1; i < series.size(); ++i) {
        std::set<Date> next;
        for (const auto& o : series[i].observations)
            if (common.count(o.date)) next.insert(o.date);
        common.swap(next);
    }
    if (common.empty()) throw EmptyInput("no common dates across series");

    std::vector<ReturnSeries> out;
    out.reserve(series.size());
    for (const auto& s : series) {
        ReturnSeries r;
        r.asset_id = s.asset_id;
        for (const auto& o : s.observations)
            if (common.count(o.date)) r.observations.push_back(o);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace tda
