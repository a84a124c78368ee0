#include "seasmort/timeseries.hpp"

#include "seasmort/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace seasmort;

TEST_CASE("month key ordering and arithmetic") {
    CHECK(MonthKey{2019, 12} < MonthKey{2020, 1});
    CHECK(MonthKey{2019, 1}.plus(11) == MonthKey{2019, 12});
    CHECK(MonthKey{2019, 1}.plus(12) == MonthKey{2020, 1});
    CHECK(MonthKey{2020, 3}.plus(-3) == MonthKey{2019, 12});
    CHECK(MonthKey{2020, 1}.months_since(MonthKey{2019, 1}) == 12);
    CHECK(MonthKey{2019, 7}.str() == "2019-07");
}

TEST_CASE("parse groups and sorts one stratum") {
    std::string csv = "stratum,year,month,deaths\nSE,2019,2,12\nSE,2019,1,10\nSE,2019,3,11\n";
    auto series = parse_monthly_deaths(csv);
    REQUIRE(series.size() == 1);
    CHECK(series[0].stratum() == "SE");
    CHECK(series[0].start() == MonthKey{2019, 1});
    CHECK(series[0].deaths() == std::vector<std::int64_t>{10, 12, 11});
    CHECK_FALSE(series[0].has_exposure());
}

TEST_CASE("parse rejects gaps, duplicates, negatives, malformed rows") {
    CHECK_THROWS_AS(parse_monthly_deaths("stratum,year,month,deaths\nSE,2019,1,10\nSE,2019,3,11\n"),
                    MissingMonthError);
    CHECK_THROWS_AS(parse_monthly_deaths("stratum,year,month,deaths\nSE,2019,1,10\nSE,2019,1,11\n"),
                    DuplicateMonthError);
    CHECK_THROWS_AS(parse_monthly_deaths("stratum,year,month,deaths\nSE,2019,1,-1\n"), NegativeDeathsError);
    CHECK_THROWS_AS(parse_monthly_deaths("stratum,year,month,deaths\nSE,2019,1\n"), MalformedRowError);
    CHECK_THROWS_AS(parse_monthly_deaths("stratum,year,month,deaths\nSE,2019,13,5\n"), MalformedRowError);
    CHECK_THROWS_AS(parse_monthly_deaths("bad,header\n"), MalformedRowError);

    try {
        parse_monthly_deaths("stratum,year,month,deaths\nSE,2019,1,10\nSE,2019,3,11\n");
    } catch (const MissingMonthError& e) {
        std::string msg = e.what();
        CHECK(msg.find("SE") != std::string::npos);
        CHECK(msg.find("2019-02") != std::string::npos);
    }
}

TEST_CASE("serialize(parse(csv)) is canonical and round-trips byte-exactly") {
    std::string canonical =
        "stratum,year,month,deaths\n"
        "DK,2018,11,7\n"
        "DK,2018,12,9\n"
        "SE:F:75-84,2018,11,40\n"
        "SE:F:75-84,2018,12,44\n";
    // Shuffle the data rows deterministically and re-assemble.
    std::vector<std::string> rows = {"SE:F:75-84,2018,12,44", "DK,2018,11,7", "SE:F:75-84,2018,11,40",
                                     "DK,2018,12,9"};
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        std::shuffle(rows.begin(), rows.end(), rng);
        std::string shuffled = "stratum,year,month,deaths\n";
        for (const auto& r : rows) shuffled += r + "\n";
        CHECK(serialize_monthly_deaths(parse_monthly_deaths(shuffled)) == canonical);
    }
    CHECK(serialize_monthly_deaths(parse_monthly_deaths(canonical)) == canonical);
}

TEST_CASE("random series survive a serialize/parse round trip") {
    std::mt19937 rng(42);
    for (int round = 0; round < 25; ++round) {
        int n_strata = 1 + static_cast<int>(rng() % 4);
        std::vector<MonthlySeries> input;
        for (int s = 0; s < n_strata; ++s) {
            int len = 1 + static_cast<int>(rng() % 40);
            std::vector<std::int64_t> deaths;
            for (int i = 0; i < len; ++i) deaths.push_back(static_cast<std::int64_t>(rng() % 1000));
            input.emplace_back("S" + std::to_string(s), MonthKey{2000 + static_cast<int>(rng() % 20),
                                                                 1 + static_cast<int>(rng() % 12)},
                               std::move(deaths));
        }
        std::string text = serialize_monthly_deaths(input);
        CHECK(serialize_monthly_deaths(parse_monthly_deaths(text)) == text);
    }
}

TEST_CASE("derive_exposure follows the mid-year rule") {
    MonthlySeries series("SE", MonthKey{2019, 1}, std::vector<std::int64_t>(12, 100));
    std::map<int, double> pop{{2019, 1'200'000.0}, {2020, 1'248'000.0}};
    auto with_exposure = derive_exposure(series, pop);
    REQUIRE(with_exposure.has_exposure());
    for (double e : with_exposure.exposure()) CHECK(e == 102'000.0);
}

TEST_CASE("equal populations give pop/12 exposure") {
    MonthlySeries series("SE", MonthKey{2019, 1}, std::vector<std::int64_t>(12, 100));
    std::map<int, double> pop{{2019, 600'000.0}, {2020, 600'000.0}};
    auto with_exposure = derive_exposure(series, pop);
    for (double e : with_exposure.exposure()) CHECK(e == 50'000.0);
}

TEST_CASE("derive_exposure validates the population map") {
    MonthlySeries series("SE", MonthKey{2019, 1}, std::vector<std::int64_t>(12, 100));
    CHECK_THROWS_AS(derive_exposure(series, {{2019, 1000.0}}), MissingPopulationYearError);
    CHECK_THROWS_AS(derive_exposure(series, {{2019, 1000.0}, {2020, 0.0}}), NonPositivePopulationError);
}

TEST_CASE("exposure is constant within each calendar year") {
    MonthlySeries series("SE", MonthKey{2018, 7}, std::vector<std::int64_t>(30, 5));
    std::map<int, double> pop{{2018, 900.0}, {2019, 960.0}, {2020, 1020.0}, {2021, 1080.0}};
    auto s = derive_exposure(series, pop);
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j)
            if (s.month_at(i).year == s.month_at(j).year) CHECK(s.exposure()[i] == s.exposure()[j]);
        CHECK(s.exposure()[i] > 0.0);
    }
}

TEST_CASE("window slices and validates") {
    std::vector<std::int64_t> deaths(120);
    for (int i = 0; i < 120; ++i) deaths[static_cast<std::size_t>(i)] = i;
    MonthlySeries series("SE", MonthKey{2010, 1}, deaths);

    auto sub = window(series, MonthKey{2011, 1}, 60);
    CHECK(sub.size() == 60);
    CHECK(sub.start() == MonthKey{2011, 1});
    CHECK(sub.deaths().front() == 12);
    CHECK(sub.stratum() == "SE");

    CHECK(window(series, series.start(), series.size()) == series);
    CHECK_THROWS_AS(window(series, MonthKey{2011, 1}, 120), OutOfRangeError);
    CHECK_THROWS_AS(window(series, MonthKey{2009, 12}, 12), OutOfRangeError);
}

TEST_CASE("rates divide deaths by exposure") {
    MonthlySeries series("SE", MonthKey{2019, 1}, {10, 20}, std::vector<double>{100.0, 80.0});
    auto r = rates(series);
    CHECK(r.rate[0] == 0.1);
    CHECK(r.rate[1] == 0.25);
}

TEST_CASE("population csv parses per stratum") {
    auto pop = parse_population("stratum,year,jan1_population\nSE,2019,1200000\nSE,2020,1248000\nDK,2019,5800000\n");
    CHECK(pop.at("SE").at(2019) == 1'200'000.0);
    CHECK(pop.at("DK").size() == 1);
    CHECK_THROWS_AS(parse_population("x\n"), MalformedRowError);
}
