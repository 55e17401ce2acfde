#include <gtest/gtest.h>

#include "tripolar/check.hpp"
#include "tripolar/cli.hpp"

using namespace tripolar;

namespace {

check::Config small_config(std::uint64_t seed = 42)
{
    check::Config cfg;
    cfg.seed = seed;
    cfg.cases = 60;
    return cfg;
}

} // namespace

TEST(Check, DefaultOperationsPass)
{
    const auto report = check::run_all(small_config());
    EXPECT_TRUE(report.passed()) << report.text();
    for (const char* suite : {"semifield", "poles", "ring", "conjugation", "ideal", "field", "oracle", "diagnostics"})
        EXPECT_TRUE(report.suite_passed(suite)) << suite;
}

TEST(Check, OtherSquaresPassRingAndIdealSuites)
{
    for (int k : {2, 3}) {
        auto cfg = small_config();
        cfg.square = k;
        const auto report = check::run_all(cfg);
        EXPECT_TRUE(report.passed()) << report.text();
    }
}

TEST(Check, ReportIsDeterministic)
{
    EXPECT_EQ(check::run_all(small_config(7)).text(), check::run_all(small_config(7)).text());
}

TEST(Check, SamplerStreamsDifferBySeed)
{
    check::Sampler a(Grid::visible(), 1, 0, 0), b(Grid::visible(), 2, 0, 0);
    EXPECT_NE(a.uniform(0, 1), b.uniform(0, 1));
}

TEST(Check, InjectedFaultsAreCaught)
{
    for (const char* fault : {"mul", "add", "neg", "conj", "recip"}) {
        const auto report = check::run_all(small_config(), cli::faulty_operations(fault));
        EXPECT_FALSE(report.passed()) << fault;
        EXPECT_NE(report.text().find("FAIL "), std::string::npos) << fault;
        EXPECT_NE(report.text().find("first: case "), std::string::npos) << fault;
    }
}

TEST(Check, FailureReportNamesFirstCase)
{
    check::Operations ops;
    ops.mul = [](const Colour& x, const Colour& y) { return c_add(x, y); };
    const auto report = check::run_all(small_config(), ops);
    const auto text = report.text();
    EXPECT_NE(text.find("FAIL ring/multiplicative-monoid"), std::string::npos) << text;
    EXPECT_NE(text.find("PROPERTY FAILURES"), std::string::npos);
}
