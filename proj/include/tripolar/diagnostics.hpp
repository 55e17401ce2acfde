#pragma once

// Hue / saturation / brightness read off a colour's stimulus curve, plus a
// rough sRGB swatch for eyeballing results.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "tripolar/colourspace.hpp"
#include "tripolar/error.hpp"
#include "tripolar/spectra.hpp"

namespace tripolar {

/// Reference sensitivity curve per pole. The defaults are plain gaussians at
/// 610 / 540 / 450 nm, sigma 30 nm, amplitude 1; they are stand-ins, not
/// physiological data.
struct RenderModel {
    std::array<Spectrum, 3> sensitivity;

    const Spectrum& operator[](Pole p) const noexcept { return sensitivity[index_of(p)]; }

    static RenderModel gaussian_default(const Grid& grid)
    {
        return {{gaussian(grid, 610.0, 30.0, 1.0), gaussian(grid, 540.0, 30.0, 1.0),
                 gaussian(grid, 450.0, 30.0, 1.0)}};
    }
};

struct Brightness {
    double energy;
    double peak_amplitude;
};

struct HsbReport {
    double hue_nm;
    double energy;
    double peak;
    double saturation;
    std::string swatch;
};

/// Sum over poles of q_X * S_X + psi_X, taken on the canonical form of x.
inline Spectrum stimulus_curve(const Colour& x, const RenderModel& model)
{
    const auto c = canonicalize(x);
    Spectrum out = zero(x.grid());
    for (Pole p : all_poles) {
        detail::require_same_grid(model[p].grid(), x.grid());
        out = add(out, add(scale(model[p], c[p].q()), c[p].psi()));
    }
    return out;
}

inline double hue(const Spectrum& s)
{
    const Peak pk = peak(s);
    if (!(pk.amplitude > 0.0))
        throw Error(ErrorKind::NoPositivePeak, "curve has no positive maximum");
    return pk.wavelength;
}

inline Brightness brightness(const Spectrum& s)
{
    return {integrate(s), peak(s).amplitude};
}

/// Width of the contiguous band around the peak where s >= peak / 2, with the
/// half-maximum crossings interpolated linearly and clipped to the grid ends.
inline double fwhm(const Spectrum& s)
{
    const auto& g = s.grid();
    const auto& v = s.samples();
    std::size_t top = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[top])
            top = i;
    if (!(v[top] > 0.0))
        throw Error(ErrorKind::NoPositivePeak, "curve has no positive maximum");
    const double half = 0.5 * v[top];

    std::size_t lo = top;
    while (lo > 0 && v[lo - 1] >= half)
        --lo;
    std::size_t hi = top;
    while (hi + 1 < v.size() && v[hi + 1] >= half)
        ++hi;

    double left = g.at(lo);
    if (lo > 0) {
        const double t = (half - v[lo - 1]) / (v[lo] - v[lo - 1]);
        left = g.at(lo - 1) + t * g.step();
    }
    double right = g.at(hi);
    if (hi + 1 < v.size()) {
        const double t = (v[hi] - half) / (v[hi] - v[hi + 1]);
        right = g.at(hi) + t * g.step();
    }
    return right - left;
}

inline double saturation(const Spectrum& s)
{
    const double sat = 1.0 - fwhm(s) / s.grid().width();
    return std::clamp(sat, 0.0, 1.0);
}

/// #RRGGBB from the canonical real parts, normalised by their maximum and
/// gamma encoded with exponent 1/2.2.
inline std::string srgb_swatch(const Colour& x)
{
    const auto c = canonicalize(x);
    const std::array<double, 3> rgb{c[Pole::R].q(), c[Pole::G].q(), c[Pole::B].q()};
    const double top = std::max({rgb[0], rgb[1], rgb[2]});
    std::array<int, 3> bytes{};
    for (std::size_t i = 0; i < 3; ++i) {
        const double lin = top > 0.0 ? rgb[i] / top : 0.0;
        const double enc = std::pow(std::clamp(lin, 0.0, 1.0), 1.0 / 2.2);
        bytes[i] = static_cast<int>(std::lround(enc * 255.0));
    }
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02X%02X%02X", bytes[0], bytes[1], bytes[2]);
    return buf;
}

inline HsbReport hsb_report(const Colour& x, const RenderModel& model)
{
    const Spectrum curve = stimulus_curve(x, model);
    const Brightness br = brightness(curve);
    return {hue(curve), br.energy, br.peak_amplitude, saturation(curve), srgb_swatch(x)};
}

} // namespace tripolar
