#pragma once

// Sampled real-valued functions of wavelength on a uniform grid.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tripolar/error.hpp"

namespace tripolar {

/// Uniform wavelength grid in nm. The last sample sits at
/// start + (count - 1) * step, which may fall short of `stop`.
class Grid {
public:
    Grid(double start, double stop, double step) : start_(start), stop_(stop), step_(step)
    {
        if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step))
            throw Error(ErrorKind::InvalidGrid, "grid bounds must be finite");
        if (!(start < stop) || !(step > 0.0))
            throw Error(ErrorKind::InvalidGrid, "need start < stop and step > 0");
        // The epsilon absorbs (stop - start) / step landing a hair under an integer.
        const double span = (stop - start) / step;
        count_ = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        if (count_ < 2)
            throw Error(ErrorKind::InvalidGrid, "grid must hold at least two samples");
    }

    static Grid visible() { return Grid(380.0, 780.0, 5.0); }

    double start() const noexcept { return start_; }
    double stop() const noexcept { return stop_; }
    double step() const noexcept { return step_; }
    std::size_t count() const noexcept { return count_; }

    double at(std::size_t i) const noexcept { return start_ + static_cast<double>(i) * step_; }
    double last() const noexcept { return at(count_ - 1); }
    double width() const noexcept { return last() - start_; }

    std::vector<double> positions() const
    {
        std::vector<double> out(count_);
        for (std::size_t i = 0; i < count_; ++i)
            out[i] = at(i);
        return out;
    }

    friend bool operator==(const Grid& a, const Grid& b) noexcept
    {
        return a.start_ == b.start_ && a.step_ == b.step_ && a.count_ == b.count_;
    }

private:
    double start_;
    double stop_;
    double step_;
    std::size_t count_;
};

class Spectrum {
public:
    Spectrum(Grid grid, std::vector<double> samples) : grid_(grid), samples_(std::move(samples))
    {
        if (samples_.size() != grid_.count())
            throw Error(ErrorKind::GridMismatch,
                        "expected " + std::to_string(grid_.count()) + " samples, got " +
                            std::to_string(samples_.size()));
        for (double v : samples_)
            if (!std::isfinite(v))
                throw Error(ErrorKind::NonFinite, "spectrum samples must be finite");
    }

    const Grid& grid() const noexcept { return grid_; }
    const std::vector<double>& samples() const noexcept { return samples_; }
    std::size_t size() const noexcept { return samples_.size(); }
    double operator[](std::size_t i) const noexcept { return samples_[i]; }

private:
    Grid grid_;
    std::vector<double> samples_;
};

struct Peak {
    double wavelength;
    double amplitude;
};

namespace detail {

inline void require_same_grid(const Grid& a, const Grid& b)
{
    if (!(a == b))
        throw Error(ErrorKind::GridMismatch, "spectra live on different grids");
}

template <class Op>
Spectrum zip(const Spectrum& a, const Spectrum& b, Op op)
{
    require_same_grid(a.grid(), b.grid());
    std::vector<double> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = op(a[i], b[i]);
    return Spectrum(a.grid(), std::move(out));
}

// Piecewise-linear interpolation of (xs, ys) at x; xs strictly ascending and x in span.
inline double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x)
{
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin())
        return ys.front();
    if (it == xs.end())
        return ys.back();
    const auto hi = static_cast<std::size_t>(it - xs.begin());
    const auto lo = hi - 1;
    const double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

inline Spectrum resample_points(const std::vector<double>& xs, const std::vector<double>& ys,
                                const Grid& target)
{
    // Allow a relative sliver of slack so grids sharing an endpoint are accepted.
    const double slack = 1e-9 * std::max(1.0, std::abs(xs.back()));
    if (target.start() < xs.front() - slack || target.last() > xs.back() + slack)
        throw Error(ErrorKind::OutOfSpan, "target grid extends beyond the source samples");
    std::vector<double> out(target.count());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = interpolate(xs, ys, target.at(i));
    return Spectrum(target, std::move(out));
}

} // namespace detail

inline Spectrum zero(const Grid& grid)
{
    return Spectrum(grid, std::vector<double>(grid.count(), 0.0));
}

inline Spectrum constant(const Grid& grid, double value)
{
    return Spectrum(grid, std::vector<double>(grid.count(), value));
}

inline Spectrum gaussian(const Grid& grid, double mu, double sigma, double amp)
{
    if (!(sigma > 0.0))
        throw Error(ErrorKind::NonPositiveSigma, "gaussian sigma must be > 0");
    std::vector<double> out(grid.count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double d = grid.at(i) - mu;
        out[i] = amp * std::exp(-(d * d) / (2.0 * sigma * sigma));
    }
    return Spectrum(grid, std::move(out));
}

inline Spectrum add(const Spectrum& a, const Spectrum& b)
{
    return detail::zip(a, b, [](double x, double y) { return x + y; });
}

inline Spectrum sub(const Spectrum& a, const Spectrum& b)
{
    return detail::zip(a, b, [](double x, double y) { return x - y; });
}

inline Spectrum scale(const Spectrum& a, double c)
{
    std::vector<double> out(a.samples());
    for (double& v : out)
        v *= c;
    return Spectrum(a.grid(), std::move(out));
}

inline Spectrum operator+(const Spectrum& a, const Spectrum& b) { return add(a, b); }
inline Spectrum operator-(const Spectrum& a, const Spectrum& b) { return sub(a, b); }
inline Spectrum operator*(double c, const Spectrum& a) { return scale(a, c); }
inline Spectrum operator*(const Spectrum& a, double c) { return scale(a, c); }

/// Trapezoidal area over the grid.
inline double integrate(const Spectrum& s)
{
    const auto& v = s.samples();
    double acc = 0.0;
    for (std::size_t i = 1; i < v.size(); ++i)
        acc += v[i - 1] + v[i];
    return 0.5 * s.grid().step() * acc;
}

/// Maximum sample; ties go to the lowest wavelength.
inline Peak peak(const Spectrum& s)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] > s[best])
            best = i;
    return {s.grid().at(best), s[best]};
}

inline double max_abs_diff(const Spectrum& a, const Spectrum& b)
{
    detail::require_same_grid(a.grid(), b.grid());
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

inline double max_abs(const Spectrum& s)
{
    double worst = 0.0;
    for (double v : s.samples())
        worst = std::max(worst, std::abs(v));
    return worst;
}

inline bool approx_eq(const Spectrum& a, const Spectrum& b, double tol)
{
    return max_abs_diff(a, b) <= tol;
}

inline Spectrum resample_linear(const Spectrum& s, const Grid& target)
{
    return detail::resample_points(s.grid().positions(), s.samples(), target);
}

// CSV: header `f,value`, one `<f>,<value>` row per sample, f strictly ascending.

inline void write_csv(const Spectrum& s, std::ostream& out)
{
    out << "f,value\n";
    out << std::setprecision(17);
    for (std::size_t i = 0; i < s.size(); ++i)
        out << s.grid().at(i) << ',' << s[i] << '\n';
}

inline std::string to_csv_string(const Spectrum& s)
{
    std::ostringstream out;
    write_csv(s, out);
    return out.str();
}

inline void to_csv(const Spectrum& s, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
    write_csv(s, out);
    if (!out)
        throw Error(ErrorKind::Io, "write to '" + path + "' failed");
}

namespace detail {

inline double parse_csv_number(const std::string& field, std::size_t line)
{
    const auto bad = [&] {
        return Error(ErrorKind::MalformedCsv,
                     "line " + std::to_string(line) + ": bad number '" + field + "'");
    };
    if (field.empty())
        throw bad();
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(field, &used);
    } catch (const std::exception&) {
        throw bad();
    }
    if (used != field.size() || !std::isfinite(v))
        throw bad();
    return v;
}

} // namespace detail

/// Reads a spectrum and places it on `grid`. Rows must sit on the grid
/// positions unless `resample` is set, in which case any ascending abscissae
/// spanning the grid are interpolated linearly.
inline Spectrum read_csv(std::istream& in, const Grid& grid, bool resample = false)
{
    std::string line;
    std::size_t lineno = 0;
    const auto next = [&]() -> bool {
        if (!std::getline(in, line))
            return false;
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        return true;
    };
    if (!next() || line != "f,value")
        throw Error(ErrorKind::MalformedCsv, "header must be exactly 'f,value'");

    std::vector<double> xs;
    std::vector<double> ys;
    while (next()) {
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw Error(ErrorKind::MalformedCsv,
                        "line " + std::to_string(lineno) + ": expected two fields");
        const double f = detail::parse_csv_number(line.substr(0, comma), lineno);
        const double v = detail::parse_csv_number(line.substr(comma + 1), lineno);
        if (!xs.empty() && !(f > xs.back()))
            throw Error(ErrorKind::MalformedCsv,
                        "line " + std::to_string(lineno) + ": f column must be strictly ascending");
        xs.push_back(f);
        ys.push_back(v);
    }
    if (xs.size() < 2)
        throw Error(ErrorKind::MalformedCsv, "need at least two rows");

    if (resample)
        return detail::resample_points(xs, ys, grid);

    bool on_grid = xs.size() == grid.count();
    for (std::size_t i = 0; on_grid && i < xs.size(); ++i)
        on_grid = std::abs(xs[i] - grid.at(i)) <= 1e-9 * grid.step();
    if (!on_grid)
        throw Error(ErrorKind::GridMismatch, "CSV abscissae do not match the configured grid");
    return Spectrum(grid, std::move(ys));
}

inline Spectrum from_csv(const std::string& path, const Grid& grid, bool resample = false)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    return read_csv(in, grid, resample);
}

} // namespace tripolar
