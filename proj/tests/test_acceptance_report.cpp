#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "besov/acceptance.hpp"

using besov::AcceptanceConfig;
using besov::Recorder;

namespace {

/// Minimal RFC 4180 reader: rows of fields, CRLF line ends.
std::vector<std::vector<std::string>> read_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows(1);
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char c = text[i];
        if (quoted)
        {
            if (c == '"' && i + 1 < text.size() && text[i + 1] == '"')
                field += text[++i];
            else if (c == '"')
                quoted = false;
            else
                field += c;
        }
        else if (c == '"')
            quoted = true;
        else if (c == ',')
        {
            rows.back().push_back(field);
            field.clear();
        }
        else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n')
        {
            rows.back().push_back(field);
            field.clear();
            rows.emplace_back();
            ++i;
        }
        else
            field += c;
    }
    if (rows.back().empty())
        rows.pop_back();
    return rows;
}

besov::AcceptanceRow sample_row()
{
    return {7, "anchor, with \"quotes\"", "a,b", 0.1, "<=", 1e-3, true, 2, 0, 0.5, "line one\nline two"};
}

}  // namespace

TEST(CsvField, QuotesOnlyWhenNeeded)
{
    EXPECT_EQ(besov::csv_field("plain"), "plain");
    EXPECT_EQ(besov::csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(besov::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(besov::csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(ToCsv, FieldsSurviveARoundTrip)
{
    besov::AcceptanceReport report{AcceptanceConfig{}, {sample_row()}, 1.0};
    const auto rows = read_csv(besov::to_csv(report));
    ASSERT_EQ(rows.size(), 2u);
    ASSERT_EQ(rows[0].size(), 11u);
    ASSERT_EQ(rows[1].size(), 11u);
    EXPECT_EQ(rows[1][0], "7");
    EXPECT_EQ(rows[1][1], "anchor, with \"quotes\"");
    EXPECT_EQ(rows[1][2], "a,b");
    EXPECT_EQ(rows[1][3], "0.1");
    EXPECT_EQ(rows[1][5], "0.001");
    EXPECT_EQ(rows[1][6], "true");
    EXPECT_EQ(rows[1][10], "line one\nline two");
}

TEST(FormatNumber, ShortestRoundTrip)
{
    for (double x : {0.1, 1.0 / 3.0, 2.38877, 1e-300, -4.5e17})
        EXPECT_EQ(std::stod(besov::format_number(x)), x);
    EXPECT_EQ(besov::format_number(std::numeric_limits<double>::quiet_NaN()), "nan");
    EXPECT_EQ(besov::format_number(-std::numeric_limits<double>::infinity()), "-inf");
}

TEST(Report, CsvAndJsonCarryIdenticalNumbers)
{
    const auto report = besov::run_acceptance(AcceptanceConfig{}, {1, 12});
    ASSERT_EQ(report.rows.size(), 2u);
    const auto rows = read_csv(besov::to_csv(report));
    const auto j = besov::to_json(report);
    ASSERT_EQ(rows.size(), 3u);
    for (std::size_t i = 0; i < 2; ++i)
    {
        const auto& csv = rows[i + 1];
        const auto& row = j.at("rows").at(i);
        EXPECT_EQ(std::stoi(csv[0]), row.at("id").get<int>());
        EXPECT_EQ(std::stod(csv[3]), row.at("measured").get<double>());
        EXPECT_EQ(std::stod(csv[5]), row.at("threshold").get<double>());
        EXPECT_EQ(csv[6] == "true", row.at("pass").get<bool>());
        EXPECT_EQ(csv[2], row.at("check").get<std::string>());
    }
    EXPECT_EQ(j.at("all_pass").get<bool>(), report.all_pass());
}

TEST(Report, TableHasOneLinePerCriterion)
{
    besov::AcceptanceRow fail = sample_row();
    fail.id = 8;
    fail.pass = false;
    besov::AcceptanceReport report{AcceptanceConfig{}, {sample_row(), fail}, 1.0};
    const auto table = besov::to_table(report);
    EXPECT_EQ(std::count(table.begin(), table.end(), '\n'), 2);
    EXPECT_EQ(table.rfind("PASS  criterion 7", 0), 0u);
    EXPECT_NE(table.find("FAIL  criterion 8"), std::string::npos);
    EXPECT_FALSE(report.all_pass());
}

TEST(RunCriterion, ExceptionBecomesAFailingRow)
{
    const besov::Criterion c{99, "throws", [](const AcceptanceConfig&, Recorder& rec) {
                                 rec.at_most("fine", 0.0, 1.0);
                                 throw std::runtime_error("boom");
                             }};
    const auto row = besov::run_criterion(c, AcceptanceConfig{});
    EXPECT_FALSE(row.pass);
    EXPECT_EQ(row.check, "exception");
    EXPECT_NE(row.detail.find("boom"), std::string::npos);
}

TEST(RunCriterion, NoSubChecksIsAFailure)
{
    const besov::Criterion c{98, "empty", [](const AcceptanceConfig&, Recorder&) {}};
    EXPECT_FALSE(besov::run_criterion(c, AcceptanceConfig{}).pass);
}

TEST(RunCriterion, BindingCheckHasTheLeastSlack)
{
    const besov::Criterion c{97, "slack", [](const AcceptanceConfig&, Recorder& rec) {
                                 rec.at_most("loose", 1e-6, 1e-3);
                                 rec.at_most("tight", 9e-4, 1e-3);
                                 rec.greater_than("far", 10.0, 1.0);
                             }};
    const auto row = besov::run_criterion(c, AcceptanceConfig{});
    EXPECT_TRUE(row.pass);
    EXPECT_EQ(row.check, "tight");
    EXPECT_EQ(row.measured, 9e-4);
    EXPECT_EQ(row.relation, "<=");
    EXPECT_EQ(row.subchecks, 3);
}

TEST(RunCriterion, FailedCheckIsCountedAndBinds)
{
    const besov::Criterion c{96, "fails", [](const AcceptanceConfig&, Recorder& rec) {
                                 rec.at_most("ok", 0.0, 1.0);
                                 rec.greater_than("bad", 0.5, 1.0);
                             }};
    const auto row = besov::run_criterion(c, AcceptanceConfig{});
    EXPECT_FALSE(row.pass);
    EXPECT_EQ(row.failed, 1);
    EXPECT_EQ(row.check, "bad");
}

TEST(Recorder, SlackAndNaN)
{
    Recorder rec;
    rec.within("w", 1.05, 1.0, 0.1);
    rec.relative("r", 2.2, 2.0, 0.05);
    rec.at_most("nan", std::numeric_limits<double>::quiet_NaN(), 1.0);
    const auto& checks = rec.checks();
    ASSERT_EQ(checks.size(), 3u);
    EXPECT_TRUE(checks[0].pass());
    EXPECT_NEAR(checks[0].slack(), 2.0, 1e-12);
    EXPECT_FALSE(checks[1].pass());
    EXPECT_LT(checks[1].slack(), 1.0);
    EXPECT_FALSE(checks[2].pass());
    EXPECT_EQ(checks[2].slack(), -std::numeric_limits<double>::infinity());
}

TEST(Acceptance, CoarseRuleFailsTheMonomialCriterion)
{
    AcceptanceConfig cfg;
    cfg.radial = 4;
    const auto report = besov::run_acceptance(cfg, {2});
    ASSERT_EQ(report.rows.size(), 1u);
    EXPECT_FALSE(report.rows[0].pass);
    EXPECT_GT(report.rows[0].failed, 0);
}

TEST(Acceptance, CriteriaAreNumberedOneToThirteen)
{
    const auto& all = besov::acceptance_criteria();
    ASSERT_EQ(all.size(), 13u);
    for (std::size_t i = 0; i < all.size(); ++i)
    {
        EXPECT_EQ(all[i].id, static_cast<int>(i) + 1);
        EXPECT_FALSE(all[i].anchor.empty());
    }
}
