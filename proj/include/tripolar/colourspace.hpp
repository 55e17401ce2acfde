#pragma once

// The colour space: formal sums R[t_R] + G[t_G] + B[t_B] of triangular
// coefficients, read modulo the cancellation law (adding one common
// coefficient to every pole changes nothing).
//
// Two quotients matter:
//   mod O  identifies x with x + R[a] + G[a] + B[a]; the canonical
//          representative has min real part 0 and mean-zero epsilon parts.
//   mod S  additionally forgets epsilon parts and the common real part; the
//          residue is the complex number r + g w + b w^2 (w = e^{2 pi i/3}),
//          and division is defined on every class except zero.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "tripolar/error.hpp"
#include "tripolar/poles.hpp"
#include "tripolar/spectra.hpp"
#include "tripolar/trisemifield.hpp"

namespace tripolar {

class Colour {
public:
    Colour(int square, TriCoeff r, TriCoeff g, TriCoeff b)
        : square_(square), coeffs_{std::move(r), std::move(g), std::move(b)}
    {
        if (square < 1 || square > 3)
            throw Error(ErrorKind::SquareMismatch,
                        "colours use Latin square 1, 2 or 3, got " + std::to_string(square));
        if (!(coeffs_[0].grid() == coeffs_[1].grid()) || !(coeffs_[0].grid() == coeffs_[2].grid()))
            throw Error(ErrorKind::GridMismatch, "pole coefficients live on different grids");
    }

    int square_index() const noexcept { return square_; }
    const LatinSquare& square() const { return latin_square(square_); }
    const Grid& grid() const noexcept { return coeffs_[0].grid(); }

    const TriCoeff& operator[](Pole p) const noexcept { return coeffs_[index_of(p)]; }
    const TriCoeff& r() const noexcept { return coeffs_[0]; }
    const TriCoeff& g() const noexcept { return coeffs_[1]; }
    const TriCoeff& b() const noexcept { return coeffs_[2]; }

    static Colour zero(const Grid& grid, int square = 1)
    {
        const auto z = TriCoeff::zero_on(grid);
        return Colour(square, z, z, z);
    }

    /// The identity pole of the square carrying [1 + 0e]; R[1] for square 1.
    static Colour unit(const Grid& grid, int square = 1)
    {
        const auto e = identity_pole(latin_square(square));
        return x_polarized(*e, TriCoeff::one(grid), square);
    }

    /// X[t] with zero coefficients on the other poles.
    static Colour x_polarized(Pole p, const TriCoeff& t, int square = 1)
    {
        const auto z = TriCoeff::zero_on(t.grid());
        return Colour(square, p == Pole::R ? t : z, p == Pole::G ? t : z, p == Pole::B ? t : z);
    }

private:
    int square_;
    std::array<TriCoeff, 3> coeffs_;
};

inline Colour x_polarized(Pole p, const TriCoeff& t, int square = 1)
{
    return Colour::x_polarized(p, t, square);
}

/// Representative of an O-class with min real part 0 and mean-zero epsilon parts.
class CanonicalColour {
public:
    const Colour& colour() const noexcept { return colour_; }
    operator const Colour&() const noexcept { return colour_; }
    const TriCoeff& operator[](Pole p) const noexcept { return colour_[p]; }

private:
    explicit CanonicalColour(Colour c) : colour_(std::move(c)) {}
    friend CanonicalColour canonicalize(const Colour& x);

    Colour colour_;
};

namespace detail {

inline void require_compatible(const Colour& x, const Colour& y)
{
    if (x.square_index() != y.square_index())
        throw Error(ErrorKind::SquareMismatch,
                    "operands use Latin squares " + std::to_string(x.square_index()) + " and " +
                        std::to_string(y.square_index()));
    require_same_grid(x.grid(), y.grid());
}

inline void require_first_square(const Colour& x, const char* what)
{
    if (x.square_index() != 1)
        throw Error(ErrorKind::SquareMismatch,
                    std::string(what) + " is defined for Latin square 1 only");
}

// Pole coefficient with (q, psi) shifted by a common (dq, dpsi).
inline TriCoeff shifted(const TriCoeff& t, double dq, const std::vector<double>& dpsi)
{
    std::vector<double> eps(t.psi().samples());
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] -= dpsi[i];
    return TriCoeff(std::max(0.0, t.q() - dq), Spectrum(t.grid(), std::move(eps)));
}

} // namespace detail

inline CanonicalColour canonicalize(const Colour& x)
{
    const double m = std::min({x.r().q(), x.g().q(), x.b().q()});
    const std::size_t n = x.grid().count();
    std::vector<double> mean(n);
    for (std::size_t i = 0; i < n; ++i)
        mean[i] = (x.r().psi()[i] + x.g().psi()[i] + x.b().psi()[i]) / 3.0;
    return CanonicalColour(Colour(x.square_index(), detail::shifted(x.r(), m, mean),
                                  detail::shifted(x.g(), m, mean), detail::shifted(x.b(), m, mean)));
}

/// Largest componentwise difference between the canonical forms.
inline double distance_mod_O(const Colour& x, const Colour& y)
{
    detail::require_compatible(x, y);
    const auto cx = canonicalize(x);
    const auto cy = canonicalize(y);
    double worst = 0.0;
    for (Pole p : all_poles)
        worst = std::max(worst, t_distance(cx[p], cy[p]));
    return worst;
}

inline bool eq_mod_O(const Colour& x, const Colour& y, double tol = default_tolerance)
{
    return distance_mod_O(x, y) <= tol;
}

// --- character oracles ----------------------------------------------------

using Complex = std::complex<double>;

/// w^k for k = 0, 1, 2 with w = e^{2 pi i / 3}.
inline Complex omega_power(int k)
{
    switch (((k % 3) + 3) % 3) {
        case 0: return {1.0, 0.0};
        case 1: return {-0.5, sqrt3_half};
        default: return {-0.5, -sqrt3_half};
    }
}

/// The Delta|S residue: r + g w + b w^2 for square 1. Other group squares use
/// their own isomorphism onto Z3, so the identity pole always maps to 1.
struct ChromaClass {
    Complex z;
};

inline ChromaClass phi_chroma(const Colour& x)
{
    const auto& sq = x.square();
    Complex z{};
    for (Pole p : all_poles)
        z += x[p].q() * omega_power(pole_exponent(sq, p));
    return {z};
}

/// Dual number over C with a pointwise epsilon part: re + eps(f) e.
struct BicomplexValue {
    Complex re;
    std::vector<Complex> eps;
};

inline BicomplexValue phi_bicomplex(const Colour& x)
{
    const auto& sq = x.square();
    BicomplexValue out{{}, std::vector<Complex>(x.grid().count())};
    for (Pole p : all_poles) {
        const Complex w = omega_power(pole_exponent(sq, p));
        out.re += x[p].q() * w;
        const auto& psi = x[p].psi();
        for (std::size_t i = 0; i < out.eps.size(); ++i)
            out.eps[i] += psi[i] * w;
    }
    return out;
}

inline BicomplexValue operator+(const BicomplexValue& a, const BicomplexValue& b)
{
    BicomplexValue out{a.re + b.re, a.eps};
    for (std::size_t i = 0; i < out.eps.size(); ++i)
        out.eps[i] += b.eps[i];
    return out;
}

inline BicomplexValue operator*(const BicomplexValue& a, const BicomplexValue& b)
{
    BicomplexValue out{a.re * b.re, std::vector<Complex>(a.eps.size())};
    for (std::size_t i = 0; i < out.eps.size(); ++i)
        out.eps[i] = a.re * b.eps[i] + b.re * a.eps[i];
    return out;
}

inline BicomplexValue operator-(const BicomplexValue& a)
{
    BicomplexValue out{-a.re, a.eps};
    for (auto& e : out.eps)
        e = -e;
    return out;
}

inline BicomplexValue conj(const BicomplexValue& a)
{
    BicomplexValue out{std::conj(a.re), a.eps};
    for (auto& e : out.eps)
        e = std::conj(e);
    return out;
}

inline double distance(const BicomplexValue& a, const BicomplexValue& b)
{
    double worst = std::abs(a.re - b.re);
    for (std::size_t i = 0; i < a.eps.size(); ++i)
        worst = std::max(worst, std::abs(a.eps[i] - b.eps[i]));
    return worst;
}

inline double distance_mod_S(const Colour& x, const Colour& y)
{
    detail::require_compatible(x, y);
    return std::abs(phi_chroma(x).z - phi_chroma(y).z);
}

inline bool eq_mod_S(const Colour& x, const Colour& y, double tol = default_tolerance)
{
    return distance_mod_S(x, y) <= tol;
}

// --- additive structure ---------------------------------------------------

inline Colour c_add(const Colour& x, const Colour& y)
{
    detail::require_compatible(x, y);
    return Colour(x.square_index(), t_add(x.r(), y.r()), t_add(x.g(), y.g()), t_add(x.b(), y.b()));
}

/// Each pole coefficient moves onto the two other poles: -R[t] = G[t] + B[t].
inline Colour c_neg(const Colour& x)
{
    return Colour(x.square_index(), t_add(x.g(), x.b()), t_add(x.r(), x.b()), t_add(x.r(), x.g()));
}

inline Colour c_sub(const Colour& x, const Colour& y) { return c_add(x, c_neg(y)); }

// --- multiplication -------------------------------------------------------

/// Double sum over pole pairs: the coefficient product lands on the pole the
/// Latin square assigns to the pair.
inline Colour c_mul(const Colour& x, const Colour& y)
{
    detail::require_compatible(x, y);
    const auto& sq = x.square();
    const Grid& grid = x.grid();
    const std::size_t n = grid.count();
    std::array<double, 3> q{};
    std::array<std::vector<double>, 3> eps{std::vector<double>(n), std::vector<double>(n),
                                           std::vector<double>(n)};
    for (Pole i : all_poles) {
        for (Pole j : all_poles) {
            const auto k = index_of(sq(i, j));
            const auto& a = x[i];
            const auto& b = y[j];
            q[k] += a.q() * b.q();
            for (std::size_t s = 0; s < n; ++s)
                eps[k][s] += a.q() * b.psi()[s] + b.q() * a.psi()[s];
        }
    }
    return Colour(x.square_index(), TriCoeff(q[0], Spectrum(grid, std::move(eps[0]))),
                  TriCoeff(q[1], Spectrum(grid, std::move(eps[1]))),
                  TriCoeff(q[2], Spectrum(grid, std::move(eps[2]))));
}

/// Exchanges the G and B coefficients; R is the projection axis of square 1.
inline Colour c_conj(const Colour& x)
{
    detail::require_first_square(x, "conjugation");
    return Colour(x.square_index(), x.r(), x.b(), x.g());
}

inline Colour operator+(const Colour& x, const Colour& y) { return c_add(x, y); }
inline Colour operator-(const Colour& x, const Colour& y) { return c_sub(x, y); }
inline Colour operator*(const Colour& x, const Colour& y) { return c_mul(x, y); }

// --- polarization ---------------------------------------------------------

/// Spread of the coefficients off pole `p`; x is p-polarized mod O iff this
/// vanishes and the p real part dominates.
inline double polarization_residue(const Colour& x, Pole p)
{
    const Pole a = p == Pole::R ? Pole::G : Pole::R;
    const Pole b = p == Pole::B ? Pole::G : Pole::B;
    return t_distance(x[a], x[b]);
}

/// The coefficient t with x congruent to p[t] mod O. The caller checks the
/// residue first; real parts within `tol` below zero are clamped.
inline TriCoeff polarized_coefficient(const Colour& x, Pole p, double tol = default_tolerance)
{
    const Pole other = p == Pole::R ? Pole::G : Pole::R;
    const double q = x[p].q() - x[other].q();
    if (q < -tol)
        throw Error(ErrorKind::PolarizationFailure,
                    std::string("pole ") + pole_name(p) + " real part falls below the others");
    return TriCoeff(std::max(0.0, q), sub(x[p].psi(), x[other].psi()));
}

inline bool is_x_polarized(const Colour& x, Pole p, double tol = default_tolerance)
{
    if (polarization_residue(x, p) > tol)
        return false;
    const Pole other = p == Pole::R ? Pole::G : Pole::R;
    return x[p].q() - x[other].q() >= -tol;
}

/// Theta with y (.) conj(y) = R[Theta] mod O. Its real part is
/// ((u-v)^2 + (v-t)^2 + (t-u)^2) / 2 = |phi(y)|^2.
inline TriCoeff theta(const Colour& y, double tol = default_tolerance)
{
    detail::require_first_square(y, "theta");
    const Colour n = c_mul(y, c_conj(y));
    const double residue = polarization_residue(n, Pole::R);
    if (residue > tol)
        throw Error(ErrorKind::PolarizationFailure,
                    "y (.) conj(y) keeps G/B residue " + std::to_string(residue));
    return polarized_coefficient(n, Pole::R, tol);
}

// --- the achromatic ideal and division -------------------------------------

/// In the O class: canonical form vanishes.
inline bool is_achromatic(const Colour& x, double tol = default_tolerance)
{
    const auto c = canonicalize(x);
    for (Pole p : all_poles)
        if (!t_is_zero(c[p], tol))
            return false;
    return true;
}

/// In S: equal real parts, any epsilon parts.
inline bool is_singular(const Colour& x, double tol = default_tolerance)
{
    const double hi = std::max({x.r().q(), x.g().q(), x.b().q()});
    const double lo = std::min({x.r().q(), x.g().q(), x.b().q()});
    return hi - lo <= tol;
}

/// Determinant of multiplication by x on real parts, restricted to the
/// sum-zero plane (the part the cancellation law does not absorb). Computed
/// from the square's table alone; zero exactly when x is singular.
inline double multiplier_determinant(const Colour& x)
{
    const auto& sq = x.square();
    // m[k][j]: weight of basis pole j landing on pole k.
    std::array<std::array<double, 3>, 3> m{};
    for (Pole i : all_poles)
        for (Pole j : all_poles)
            m[index_of(sq(i, j))][index_of(j)] += x[i].q();
    const auto apply = [&](std::array<double, 3> v) {
        std::array<double, 3> w{};
        for (std::size_t k = 0; k < 3; ++k)
            for (std::size_t j = 0; j < 3; ++j)
                w[k] += m[k][j] * v[j];
        return w;
    };
    // Basis (1,-1,0), (0,1,-1); a vector (w0, w1, w2) with zero sum has
    // coordinates (w0, -w2) in it.
    const auto w1 = apply({1.0, -1.0, 0.0});
    const auto w2 = apply({0.0, 1.0, -1.0});
    return w1[0] * (-w2[2]) - w2[0] * (-w1[2]);
}

inline Colour c_scale(const Colour& x, const TriCoeff& c)
{
    return Colour(x.square_index(), t_mul(x.r(), c), t_mul(x.g(), c), t_mul(x.b(), c));
}

/// 1 / y represented as conj(y) scaled by 1/Theta.
inline Colour c_recip(const Colour& y, double tol = default_tolerance)
{
    detail::require_first_square(y, "division");
    if (is_singular(y, tol))
        throw Error(ErrorKind::SingularDivisor, "divisor has equal real parts");
    const TriCoeff th = theta(y, tol);
    if (!(th.q() > 0.0))
        throw Error(ErrorKind::SingularDivisor, "divisor norm vanishes");
    Colour out = c_scale(c_conj(y), t_recip(th));
    const Colour check = c_mul(out, y);
    if (!eq_mod_S(check, Colour::unit(y.grid(), y.square_index()), tol))
        throw Error(ErrorKind::SingularDivisor, "divisor too close to singular for the tolerance");
    return out;
}

inline Colour c_div(const Colour& x, const Colour& y, double tol = default_tolerance)
{
    detail::require_compatible(x, y);
    return c_mul(x, c_recip(y, tol));
}

inline Colour operator/(const Colour& x, const Colour& y) { return c_div(x, y); }

} // namespace tripolar
