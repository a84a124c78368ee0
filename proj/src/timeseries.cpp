#include "seasmort/timeseries.hpp"

#include "seasmort/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

namespace seasmort {

MonthKey MonthKey::plus(int n) const {
    int idx = year * 12 + (month - 1) + n;
    int y = idx / 12;
    int m = idx % 12;
    if (m < 0) {
        m += 12;
        y -= 1;
    }
    return MonthKey{y, m + 1};
}

int MonthKey::months_since(const MonthKey& other) const {
    return (year - other.year) * 12 + (month - other.month);
}

std::string MonthKey::str() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d", year, month);
    return buf;
}

MonthlySeries::MonthlySeries(std::string stratum, MonthKey start, std::vector<std::int64_t> deaths,
                             std::optional<std::vector<double>> exposure)
    : stratum_(std::move(stratum)), start_(start), deaths_(std::move(deaths)), exposure_(std::move(exposure)) {
    if (start_.month < 1 || start_.month > 12)
        throw ValidationError("month out of range in series '" + stratum_ + "': " + start_.str());
    for (std::size_t i = 0; i < deaths_.size(); ++i)
        if (deaths_[i] < 0)
            throw NegativeDeathsError("negative deaths in stratum '" + stratum_ + "' at " + month_at(i).str());
    if (exposure_) {
        if (exposure_->size() != deaths_.size())
            throw ExposureLengthMismatchError("exposure length " + std::to_string(exposure_->size()) +
                                              " != deaths length " + std::to_string(deaths_.size()) +
                                              " in stratum '" + stratum_ + "'");
        for (std::size_t i = 0; i < exposure_->size(); ++i)
            if (!((*exposure_)[i] > 0.0))
                throw NonPositivePopulationError("non-positive exposure in stratum '" + stratum_ + "' at " +
                                                 month_at(i).str());
    }
}

std::vector<MonthKey> MonthlySeries::months() const {
    std::vector<MonthKey> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(month_at(i));
    return out;
}

RateSeries rates(const MonthlySeries& series) {
    if (!series.has_exposure())
        throw ValidationError("rates requested for stratum '" + series.stratum() + "' without exposure");
    RateSeries out{series.start(), {}};
    out.rate.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i)
        out.rate.push_back(static_cast<double>(series.deaths()[i]) / series.exposure()[i]);
    return out;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::int64_t parse_int(const std::string& s, const char* what, const std::string& context) {
    std::int64_t value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw MalformedRowError("malformed " + std::string(what) + " '" + s + "' " + context);
    return value;
}

double parse_double(const std::string& s, const char* what, const std::string& context) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw MalformedRowError("malformed " + std::string(what) + " '" + s + "' " + context);
    }
}

std::vector<std::string> read_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur)) {
        if (!cur.empty() && cur.back() == '\r') cur.pop_back();
        lines.push_back(cur);
    }
    return lines;
}

} // namespace

std::vector<MonthlySeries> parse_monthly_deaths(const std::string& csv_text) {
    auto lines = read_lines(csv_text);
    if (lines.empty() || lines[0] != "stratum,year,month,deaths")
        throw MalformedRowError("expected header 'stratum,year,month,deaths'");

    struct Row {
        MonthKey key;
        std::int64_t deaths;
    };
    std::map<std::string, std::vector<Row>> by_stratum;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = split_fields(lines[i]);
        if (fields.size() != 4)
            throw MalformedRowError("expected 4 fields at line " + std::to_string(i + 1) + ": '" + lines[i] + "'");
        const std::string& stratum = fields[0];
        std::string context = "for stratum '" + stratum + "' at line " + std::to_string(i + 1);
        int year = static_cast<int>(parse_int(fields[1], "year", context));
        int month = static_cast<int>(parse_int(fields[2], "month", context));
        if (month < 1 || month > 12)
            throw MalformedRowError("month " + std::to_string(month) + " out of range " + context);
        std::int64_t deaths = parse_int(fields[3], "deaths", context);
        MonthKey key{year, month};
        if (deaths < 0)
            throw NegativeDeathsError("negative deaths in stratum '" + stratum + "' at " + key.str());
        by_stratum[stratum].push_back(Row{key, deaths});
    }

    std::vector<MonthlySeries> out;
    for (auto& [stratum, rows] : by_stratum) {
        std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.key < b.key; });
        std::vector<std::int64_t> deaths;
        deaths.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i > 0) {
                MonthKey expected = rows[i - 1].key.next();
                if (rows[i].key == rows[i - 1].key)
                    throw DuplicateMonthError("duplicate month in stratum '" + stratum + "' at " + rows[i].key.str());
                if (rows[i].key != expected)
                    throw MissingMonthError("missing month in stratum '" + stratum + "' at " + expected.str());
            }
            deaths.push_back(rows[i].deaths);
        }
        out.emplace_back(stratum, rows.front().key, std::move(deaths));
    }
    return out;
}

std::string serialize_monthly_deaths(const std::vector<MonthlySeries>& series) {
    std::vector<const MonthlySeries*> ordered;
    ordered.reserve(series.size());
    for (const auto& s : series) ordered.push_back(&s);
    std::sort(ordered.begin(), ordered.end(), [](const MonthlySeries* a, const MonthlySeries* b) {
        if (a->stratum() != b->stratum()) return a->stratum() < b->stratum();
        return a->start() < b->start();
    });

    std::string out = "stratum,year,month,deaths\n";
    for (const auto* s : ordered) {
        for (std::size_t i = 0; i < s->size(); ++i) {
            MonthKey m = s->month_at(i);
            out += s->stratum();
            out += ',';
            out += std::to_string(m.year);
            out += ',';
            out += std::to_string(m.month);
            out += ',';
            out += std::to_string(s->deaths()[i]);
            out += '\n';
        }
    }
    return out;
}

std::map<std::string, std::map<int, double>> parse_population(const std::string& csv_text) {
    auto lines = read_lines(csv_text);
    if (lines.empty() || lines[0] != "stratum,year,jan1_population")
        throw MalformedRowError("expected header 'stratum,year,jan1_population'");
    std::map<std::string, std::map<int, double>> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        auto fields = split_fields(lines[i]);
        if (fields.size() != 3)
            throw MalformedRowError("expected 3 fields at line " + std::to_string(i + 1) + ": '" + lines[i] + "'");
        std::string context = "for stratum '" + fields[0] + "' at line " + std::to_string(i + 1);
        int year = static_cast<int>(parse_int(fields[1], "year", context));
        double pop = parse_double(fields[2], "jan1_population", context);
        out[fields[0]][year] = pop;
    }
    return out;
}

MonthlySeries derive_exposure(const MonthlySeries& series, const std::map<int, double>& jan1_population) {
    std::vector<double> exposure;
    exposure.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        int year = series.month_at(i).year;
        for (int y : {year, year + 1}) {
            auto it = jan1_population.find(y);
            if (it == jan1_population.end())
                throw MissingPopulationYearError("population missing for year " + std::to_string(y) +
                                                 " (stratum '" + series.stratum() + "')");
            if (!(it->second > 0.0))
                throw NonPositivePopulationError("non-positive population for year " + std::to_string(y) +
                                                 " (stratum '" + series.stratum() + "')");
        }
        exposure.push_back((jan1_population.at(year) + jan1_population.at(year + 1)) / 2.0 / 12.0);
    }
    return MonthlySeries(series.stratum(), series.start(), series.deaths(), std::move(exposure));
}

MonthlySeries window(const MonthlySeries& series, MonthKey start, std::size_t n_months) {
    int offset = start.months_since(series.start());
    if (offset < 0 || n_months == 0 ||
        static_cast<std::size_t>(offset) + n_months > series.size())
        throw OutOfRangeError("window [" + start.str() + ", +" + std::to_string(n_months) +
                              ") outside series '" + series.stratum() + "'");
    auto first = static_cast<std::ptrdiff_t>(offset);
    auto last = first + static_cast<std::ptrdiff_t>(n_months);
    std::vector<std::int64_t> deaths(series.deaths().begin() + first, series.deaths().begin() + last);
    std::optional<std::vector<double>> exposure;
    if (series.has_exposure())
        exposure.emplace(series.exposure().begin() + first, series.exposure().begin() + last);
    return MonthlySeries(series.stratum(), start, std::move(deaths), std::move(exposure));
}

} // namespace seasmort
