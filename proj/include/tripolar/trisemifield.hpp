#pragma once

// Triangular coefficients q + psi(f) e with e^2 = 0 and q >= 0. Addition,
// multiplication and division follow dual-number rules, pointwise in f.

#include <cmath>
#include <string>
#include <utility>

#include "tripolar/error.hpp"
#include "tripolar/spectra.hpp"

namespace tripolar {

inline constexpr double default_tolerance = 1e-9;

class TriCoeff {
public:
    TriCoeff(double q, Spectrum psi) : q_(q), psi_(std::move(psi))
    {
        if (!std::isfinite(q))
            throw Error(ErrorKind::NonFinite, "real part must be finite");
        if (q < 0.0)
            throw Error(ErrorKind::NegativeRealPart,
                        "real part " + std::to_string(q) + " is below zero");
    }

    /// q + 0e
    static TriCoeff real(const Grid& grid, double q) { return TriCoeff(q, zero(grid)); }
    static TriCoeff zero_on(const Grid& grid) { return real(grid, 0.0); }
    static TriCoeff one(const Grid& grid) { return real(grid, 1.0); }

    double q() const noexcept { return q_; }
    const Spectrum& psi() const noexcept { return psi_; }
    const Grid& grid() const noexcept { return psi_.grid(); }

private:
    double q_;
    Spectrum psi_;
};

inline TriCoeff t_add(const TriCoeff& x, const TriCoeff& y)
{
    return TriCoeff(x.q() + y.q(), add(x.psi(), y.psi()));
}

inline TriCoeff t_mul(const TriCoeff& x, const TriCoeff& y)
{
    detail::require_same_grid(x.grid(), y.grid());
    std::vector<double> eps(x.psi().size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] = x.q() * y.psi()[i] + y.q() * x.psi()[i];
    return TriCoeff(x.q() * y.q(), Spectrum(x.grid(), std::move(eps)));
}

inline TriCoeff t_div(const TriCoeff& x, const TriCoeff& y)
{
    detail::require_same_grid(x.grid(), y.grid());
    if (!(y.q() > 0.0))
        throw Error(ErrorKind::DivisorRealZero, "divisor has zero real part");
    const double d = y.q() * y.q();
    std::vector<double> eps(x.psi().size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] = (y.q() * x.psi()[i] - x.q() * y.psi()[i]) / d;
    return TriCoeff(x.q() / y.q(), Spectrum(x.grid(), std::move(eps)));
}

/// 1/q - (psi/q^2) e
inline TriCoeff t_recip(const TriCoeff& y)
{
    if (!(y.q() > 0.0))
        throw Error(ErrorKind::DivisorRealZero, "reciprocal of a coefficient with zero real part");
    const double d = y.q() * y.q();
    std::vector<double> eps(y.psi().size());
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] = -y.psi()[i] / d;
    return TriCoeff(1.0 / y.q(), Spectrum(y.grid(), std::move(eps)));
}

inline TriCoeff t_scale(const TriCoeff& x, double c)
{
    if (c < 0.0)
        throw Error(ErrorKind::NegativeRealPart, "scaling by a negative factor leaves T");
    return TriCoeff(x.q() * c, scale(x.psi(), c));
}

/// Largest absolute deviation over the real part and every epsilon sample.
inline double t_distance(const TriCoeff& x, const TriCoeff& y)
{
    return std::max(std::abs(x.q() - y.q()), max_abs_diff(x.psi(), y.psi()));
}

inline bool t_eq(const TriCoeff& x, const TriCoeff& y, double tol = default_tolerance)
{
    return t_distance(x, y) <= tol;
}

inline bool t_is_zero(const TriCoeff& x, double tol = default_tolerance)
{
    return std::abs(x.q()) <= tol && max_abs(x.psi()) <= tol;
}

inline TriCoeff operator+(const TriCoeff& x, const TriCoeff& y) { return t_add(x, y); }
inline TriCoeff operator*(const TriCoeff& x, const TriCoeff& y) { return t_mul(x, y); }
inline TriCoeff operator/(const TriCoeff& x, const TriCoeff& y) { return t_div(x, y); }

} // namespace tripolar
