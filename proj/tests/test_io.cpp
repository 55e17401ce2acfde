#include <random>

#include <gtest/gtest.h>

#include "tripolar/io.hpp"

using namespace tripolar;

namespace {

const Grid small(400, 420, 10);

} // namespace

TEST(ColourJson, Layout)
{
    const Colour x(1, TriCoeff(1, Spectrum(small, {0.5, 0, -1})), TriCoeff::real(small, 0),
                   TriCoeff(0.25, Spectrum(small, {0.1, 0, 0})));
    EXPECT_EQ(colour_to_json(x),
              "{\"square\":1,\"grid\":{\"start\":400,\"stop\":420,\"step\":10},"
              "\"R\":{\"q\":1,\"eps\":[0.5,0,-1]},\"G\":{\"q\":0,\"eps\":[0,0,0]},"
              "\"B\":{\"q\":0.25,\"eps\":[0.10000000000000001,0,0]}}");
}

TEST(ColourJson, RoundTripIsExact)
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(-1e3, 1e3), q(0, 50);
    const Grid g = Grid::visible();
    for (int i = 0; i < 50; ++i) {
        std::array<std::vector<double>, 3> eps;
        for (auto& e : eps) {
            e.resize(g.count());
            for (auto& v : e)
                v = d(rng) / 7.0;
        }
        const Colour x(1 + i % 3, TriCoeff(q(rng), Spectrum(g, eps[0])), TriCoeff(q(rng), Spectrum(g, eps[1])),
                       TriCoeff(q(rng), Spectrum(g, eps[2])));
        const Colour back = colour_from_json(colour_to_json(x));
        EXPECT_EQ(back.square_index(), x.square_index());
        EXPECT_EQ(distance_mod_O(back, x), 0.0);
        for (Pole p : all_poles)
            EXPECT_EQ(t_distance(back[p], x[p]), 0.0);
    }
}

TEST(ColourJson, RejectsBadDocuments)
{
    const auto kind_of = [](const std::string& text) {
        try {
            colour_from_json(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::Io;
    };
    EXPECT_EQ(kind_of("{not json"), ErrorKind::MalformedJson);
    EXPECT_EQ(kind_of("{\"square\":1}"), ErrorKind::MalformedJson);
    const std::string head = "{\"square\":1,\"grid\":{\"start\":400,\"stop\":420,\"step\":10},";
    EXPECT_EQ(kind_of(head + "\"R\":{\"q\":1,\"eps\":[0,0]},\"G\":{\"q\":0,\"eps\":[0,0,0]},"
                             "\"B\":{\"q\":0,\"eps\":[0,0,0]}}"),
              ErrorKind::GridMismatch);
    EXPECT_EQ(kind_of(head + "\"R\":{\"q\":-1,\"eps\":[0,0,0]},\"G\":{\"q\":0,\"eps\":[0,0,0]},"
                             "\"B\":{\"q\":0,\"eps\":[0,0,0]}}"),
              ErrorKind::NegativeRealPart);
}

TEST(HsbJson, Layout)
{
    EXPECT_EQ(hsb_to_json({500, 75.25, 1, 0.5, "#FF0000"}),
              "{\"hue_nm\":500,\"energy\":75.25,\"peak\":1,\"saturation\":0.5,\"swatch\":\"#FF0000\"}");
}

TEST(Pretty, SummarisesEpsilon)
{
    const Colour x(1, TriCoeff(1, Spectrum(small, {0.5, 0, -1})), TriCoeff::real(small, 0),
                   TriCoeff::real(small, 2.5));
    EXPECT_EQ(colour_to_pretty(x), "R[1 + eps{max|.|=1}] + G[0] + B[2.5]");
}
