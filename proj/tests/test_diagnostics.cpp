#include <cmath>

#include <gtest/gtest.h>

#include "tripolar/diagnostics.hpp"

using namespace tripolar;

namespace {

const Grid grid = Grid::visible();
const RenderModel model = RenderModel::gaussian_default(grid);

Colour rgb(double r, double g, double b)
{
    return Colour(1, TriCoeff::real(grid, r), TriCoeff::real(grid, g), TriCoeff::real(grid, b));
}

} // namespace

TEST(Stimulus, AchromaticIsFlatZero)
{
    const TriCoeff a(1.2, gaussian(grid, 500, 30, 0.7));
    EXPECT_TRUE(approx_eq(stimulus_curve(Colour(1, a, a, a), model), zero(grid), 1e-12));
}

TEST(Stimulus, PurePoleIsItsSensitivity)
{
    EXPECT_TRUE(approx_eq(stimulus_curve(rgb(1, 0, 0), model), model[Pole::R], 1e-15));
}

TEST(Stimulus, LinearOnCanonicalInputs)
{
    const Colour x(1, TriCoeff(1.0, gaussian(grid, 500, 20, 0.4)), TriCoeff::real(grid, 0.3),
                   TriCoeff(0.0, gaussian(grid, 600, 50, -0.2)));
    // Both minima sit on B, so the sum is canonical too.
    const Colour y(1, TriCoeff::real(grid, 0.7), TriCoeff(2.0, gaussian(grid, 450, 30, 0.1)),
                   TriCoeff::real(grid, 0));
    const Colour cx = canonicalize(x), cy = canonicalize(y);
    EXPECT_TRUE(approx_eq(stimulus_curve(c_add(cx, cy), model),
                          add(stimulus_curve(cx, model), stimulus_curve(cy, model)), 1e-12));
}

TEST(Hue, SummedCurvesPeakAt500)
{
    const auto sum = add(add(gaussian(grid, 500, 15, 1.0), gaussian(grid, 500, 45, 0.6)),
                         gaussian(grid, 500, 90, 0.3));
    EXPECT_EQ(hue(sum), 500.0);
    EXPECT_EQ(hue(scale(sum, 7.5)), 500.0);
}

TEST(Hue, DefaultRedChannelPeaksAt610)
{
    EXPECT_EQ(hue(stimulus_curve(rgb(1, 0, 0), model)), 610.0);
}

TEST(Hue, NoPositivePeak)
{
    try {
        hue(scale(gaussian(grid, 500, 30, 1), -1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NoPositivePeak);
    }
    EXPECT_THROW(saturation(zero(grid)), Error);
}

TEST(Brightness, LinearAndZero)
{
    const auto s = gaussian(grid, 500, 30, 1);
    const auto b1 = brightness(s), b2 = brightness(scale(s, 2));
    EXPECT_NEAR(b2.energy, 2 * b1.energy, 1e-12);
    EXPECT_NEAR(b2.peak_amplitude, 2 * b1.peak_amplitude, 1e-12);
    const auto z = brightness(zero(grid));
    EXPECT_EQ(z.energy, 0.0);
    EXPECT_EQ(z.peak_amplitude, 0.0);
    EXPECT_NEAR(b1.energy / (30.0 * std::sqrt(2 * M_PI)), 1.0, 1e-3);
}

TEST(Saturation, FwhmOfGaussian)
{
    // FWHM of a gaussian is 2 sqrt(2 ln 2) sigma; linear crossing interpolation
    // on a 5 nm grid stays within a fraction of a step.
    const double exact = 2.0 * std::sqrt(2.0 * std::log(2.0)) * 40.0;
    EXPECT_NEAR(fwhm(gaussian(grid, 580, 40, 1)), exact, 0.5);
}

TEST(Saturation, DecreasesWithWidth)
{
    EXPECT_GT(saturation(gaussian(grid, 580, 10, 1)), saturation(gaussian(grid, 580, 60, 1)));
    double prev = 1.1;
    for (double sigma : {10.0, 20.0, 40.0, 60.0}) {
        const double s = saturation(gaussian(grid, 580, sigma, 1));
        EXPECT_LT(s, prev);
        EXPECT_GE(s, 0.0);
        prev = s;
    }
}

TEST(Saturation, ConstantIsZero)
{
    EXPECT_EQ(saturation(constant(grid, 0.4)), 0.0);
}

TEST(Saturation, NonComparableWithBrightness)
{
    const auto narrow = gaussian(grid, 550, 10, 1.0);
    const auto wide = gaussian(grid, 550, 60, 0.6);
    EXPECT_GT(saturation(narrow), saturation(wide));
    EXPECT_LT(brightness(narrow).energy, brightness(wide).energy);
    EXPECT_GT(brightness(narrow).peak_amplitude, brightness(wide).peak_amplitude);
}

TEST(Swatch, Examples)
{
    EXPECT_EQ(srgb_swatch(rgb(2, 2, 2)), "#000000");
    EXPECT_EQ(srgb_swatch(rgb(1, 0, 0)), "#FF0000");
    EXPECT_EQ(srgb_swatch(rgb(3, 2, 2)), "#FF0000");
    EXPECT_EQ(srgb_swatch(rgb(1, 1, 0)), "#FFFF00");
    // 0.5 ^ (1/2.2) * 255 = 186.08
    EXPECT_EQ(srgb_swatch(rgb(2, 1, 0)), "#FFBA00");
}

TEST(Swatch, DependsOnlyOnCanonicalClass)
{
    const auto x = rgb(0.4, 1.3, 0.9);
    const TriCoeff a(0.7, gaussian(grid, 500, 30, 2));
    EXPECT_EQ(srgb_swatch(x), srgb_swatch(c_add(x, Colour(1, a, a, a))));
}

TEST(Report, Fields)
{
    const auto r = hsb_report(rgb(1, 0, 0), model);
    EXPECT_EQ(r.hue_nm, 610.0);
    EXPECT_NEAR(r.peak, 1.0, 1e-15);
    EXPECT_NEAR(r.energy, integrate(model[Pole::R]), 1e-12);
    EXPECT_EQ(r.swatch, "#FF0000");
}
