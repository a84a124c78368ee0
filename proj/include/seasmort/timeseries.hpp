#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace seasmort {

/// Calendar month. Ordering is (year, month) lexicographic.
struct MonthKey {
    int year = 0;
    int month = 1; // 1..12

    auto operator<=>(const MonthKey&) const = default;

    MonthKey next() const { return month == 12 ? MonthKey{year + 1, 1} : MonthKey{year, month + 1}; }

    /// Month obtained by stepping `n` months forward (n may be negative).
    MonthKey plus(int n) const;

    /// Signed number of months from `other` to this key.
    int months_since(const MonthKey& other) const;

    std::string str() const; // "YYYY-MM"
};

/// Observed monthly deaths for one population stratum, with optional
/// person-month exposures. Months are contiguous by construction: the
/// series stores its first month and t = 1..size() indexes the rest.
class MonthlySeries {
public:
    MonthlySeries(std::string stratum, MonthKey start, std::vector<std::int64_t> deaths,
                  std::optional<std::vector<double>> exposure = std::nullopt);

    const std::string& stratum() const { return stratum_; }
    MonthKey start() const { return start_; }
    std::size_t size() const { return deaths_.size(); }
    const std::vector<std::int64_t>& deaths() const { return deaths_; }
    bool has_exposure() const { return exposure_.has_value(); }
    const std::vector<double>& exposure() const { return *exposure_; }

    /// Month at 0-based position i.
    MonthKey month_at(std::size_t i) const { return start_.plus(static_cast<int>(i)); }
    std::vector<MonthKey> months() const;

    bool operator==(const MonthlySeries&) const = default;

private:
    std::string stratum_;
    MonthKey start_;
    std::vector<std::int64_t> deaths_;
    std::optional<std::vector<double>> exposure_;
};

/// Monthly death rates (CDR or ASDR): rate_t = deaths_t / exposure_t.
struct RateSeries {
    MonthKey start;
    std::vector<double> rate;
};

RateSeries rates(const MonthlySeries& series);

/// Parses `stratum,year,month,deaths` CSV text. Rows may be unordered;
/// the result is grouped by stratum and sorted, one series per stratum.
std::vector<MonthlySeries> parse_monthly_deaths(const std::string& csv_text);

/// Canonical serialization: header plus rows sorted by (stratum, year, month),
/// LF line endings. parse/serialize round-trip is byte-exact.
std::string serialize_monthly_deaths(const std::vector<MonthlySeries>& series);

/// Parses `stratum,year,jan1_population` CSV into per-stratum year maps.
std::map<std::string, std::map<int, double>> parse_population(const std::string& csv_text);

/// Attaches exposures: every month of calendar year Y receives
/// (pop[Y] + pop[Y+1]) / 2 / 12 person-months.
MonthlySeries derive_exposure(const MonthlySeries& series, const std::map<int, double>& jan1_population);

/// Contiguous sub-series of n_months starting at `start`.
MonthlySeries window(const MonthlySeries& series, MonthKey start, std::size_t n_months);

} // namespace seasmort
