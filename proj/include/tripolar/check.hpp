#pragma once

// Seeded randomized verification of the algebra. Every case draws from its own
// generator keyed by (seed, property, case index), so reports are
// reproducible byte for byte and a failing case can be replayed alone.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tripolar/colourspace.hpp"
#include "tripolar/diagnostics.hpp"
#include "tripolar/poles.hpp"
#include "tripolar/spectra.hpp"
#include "tripolar/trisemifield.hpp"

namespace tripolar::check {

/// Random spectra, coefficients and colours. Real parts lie in [0, 4] with a
/// bias towards exact zeros and ties; epsilon parts are sums of one or two
/// gaussians with amplitudes in [-2, 2].
class Sampler {
public:
    Sampler(Grid grid, std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : grid_(grid)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
                          static_cast<std::uint32_t>(index >> 32)};
        rng_.seed(seq);
    }

    const Grid& grid() const noexcept { return grid_; }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool chance(double p) { return uniform(0.0, 1.0) < p; }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Spectrum spectrum(double amp = 2.0)
    {
        if (chance(0.1))
            return zero(grid_);
        Spectrum s = zero(grid_);
        const int bumps = integer(1, 2);
        for (int i = 0; i < bumps; ++i)
            s = add(s, gaussian(grid_, uniform(grid_.start(), grid_.last()), uniform(8.0, 80.0),
                                uniform(-amp, amp)));
        return s;
    }

    double real_part()
    {
        if (chance(0.1))
            return 0.0;
        return uniform(0.0, 4.0);
    }

    TriCoeff coeff() { return TriCoeff(real_part(), spectrum()); }

    /// Strictly positive real part, for reciprocals.
    TriCoeff unit_coeff() { return TriCoeff(uniform(0.1, 4.0), spectrum()); }

    Colour colour(int square)
    {
        return Colour(square, coeff(), coeff(), coeff());
    }

    /// R[a] + G[a] + B[a] for one random coefficient a.
    Colour achromatic(int square)
    {
        const TriCoeff a = coeff();
        return Colour(square, a, a, a);
    }

    /// Equal real parts, independent (possibly large) epsilon parts.
    Colour singular(int square)
    {
        const double a = real_part();
        return Colour(square, TriCoeff(a, spectrum(20.0)), TriCoeff(a, spectrum(20.0)),
                      TriCoeff(a, spectrum(20.0)));
    }

    /// A colour whose chroma residue has modulus at least `floor`.
    Colour nonsingular(int square, double floor = 0.25)
    {
        for (;;) {
            Colour c = colour(square);
            if (std::abs(phi_chroma(c).z) >= floor)
                return c;
        }
    }

private:
    Grid grid_;
    std::mt19937_64 rng_;
};

/// Implementations under test. Defaults are the library operations; tests
/// substitute broken ones to confirm the suites notice.
struct Operations {
    std::function<Colour(const Colour&, const Colour&)> add = [](const Colour& x, const Colour& y) {
        return c_add(x, y);
    };
    std::function<Colour(const Colour&)> neg = [](const Colour& x) { return c_neg(x); };
    std::function<Colour(const Colour&, const Colour&)> mul = [](const Colour& x, const Colour& y) {
        return c_mul(x, y);
    };
    std::function<Colour(const Colour&)> conj = [](const Colour& x) { return c_conj(x); };
    std::function<Colour(const Colour&, double)> recip = [](const Colour& x, double tol) {
        return c_recip(x, tol);
    };
};

struct Config {
    Grid grid = Grid::visible();
    int square = 1;
    double tol = default_tolerance;
    std::uint64_t seed = 42;
    std::size_t cases = 1000;
};

struct PropertyResult {
    std::string suite;
    std::string name;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::optional<std::size_t> first_case;
    std::string first_detail;

    bool passed() const noexcept { return failures == 0; }
};

struct Report {
    std::vector<PropertyResult> properties;

    bool passed() const noexcept
    {
        for (const auto& p : properties)
            if (!p.passed())
                return false;
        return true;
    }

    bool suite_passed(const std::string& suite) const
    {
        bool seen = false;
        for (const auto& p : properties)
            if (p.suite == suite) {
                seen = true;
                if (!p.passed())
                    return false;
            }
        return seen;
    }

    std::string text() const
    {
        std::ostringstream out;
        std::size_t failed = 0;
        for (const auto& p : properties) {
            out << (p.passed() ? "PASS " : "FAIL ") << p.suite << '/' << p.name << " ("
                << p.cases << " cases";
            if (!p.passed()) {
                ++failed;
                out << ", " << p.failures << " failing; first: case " << *p.first_case << ": "
                    << p.first_detail;
            }
            out << ")\n";
        }
        out << (failed == 0 ? "ALL PROPERTIES HOLD" : "PROPERTY FAILURES") << " ("
            << properties.size() - failed << '/' << properties.size() << " passed)\n";
        return out.str();
    }
};

namespace detail {

inline std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

inline std::string fmt(Complex z) { return "(" + fmt(z.real()) + "," + fmt(z.imag()) + ")"; }

inline std::string describe(const Colour& x)
{
    return "R" + fmt(x.r().q()) + " G" + fmt(x.g().q()) + " B" + fmt(x.b().q());
}

class Runner {
public:
    Runner(const Config& cfg, Report& report) : cfg_(cfg), report_(report) {}

    /// `body` returns an empty string on success or a failure description.
    template <class Body>
    void property(const std::string& suite, const std::string& name, std::size_t cases, Body body)
    {
        PropertyResult r{suite, name, cases, 0, std::nullopt, {}};
        const std::uint64_t stream = report_.properties.size();
        for (std::size_t i = 0; i < cases; ++i) {
            Sampler s(cfg_.grid, cfg_.seed, stream, i);
            std::string detail;
            try {
                detail = body(s);
            } catch (const std::exception& e) {
                detail = std::string("threw ") + e.what();
            }
            if (!detail.empty()) {
                if (r.failures++ == 0) {
                    r.first_case = i;
                    r.first_detail = detail;
                }
            }
        }
        report_.properties.push_back(std::move(r));
    }

    template <class Body>
    void fact(const std::string& suite, const std::string& name, Body body)
    {
        property(suite, name, 1, [&](Sampler&) { return body(); });
    }

    const Config& cfg() const noexcept { return cfg_; }

private:
    const Config& cfg_;
    Report& report_;
};

inline std::string within(const char* what, double err, double tol)
{
    if (err <= tol)
        return {};
    return std::string(what) + " off by " + fmt(err);
}

} // namespace detail

inline void semifield_suite(detail::Runner& run)
{
    const auto n = run.cfg().cases;
    const double tol = run.cfg().tol;
    using detail::within;
    const std::string S = "semifield";

    run.property(S, "add-associative-commutative", n, [&](Sampler& s) {
        const auto x = s.coeff(), y = s.coeff(), z = s.coeff();
        auto e = within("associativity", t_distance(t_add(t_add(x, y), z), t_add(x, t_add(y, z))), tol);
        if (e.empty())
            e = within("commutativity", t_distance(t_add(x, y), t_add(y, x)), tol);
        if (e.empty())
            e = within("zero", t_distance(t_add(x, TriCoeff::zero_on(s.grid())), x), tol);
        return e;
    });
    run.property(S, "mul-associative-commutative-unit", n, [&](Sampler& s) {
        const auto x = s.coeff(), y = s.coeff(), z = s.coeff();
        auto e = within("associativity", t_distance(t_mul(t_mul(x, y), z), t_mul(x, t_mul(y, z))), tol);
        if (e.empty())
            e = within("commutativity", t_distance(t_mul(x, y), t_mul(y, x)), tol);
        if (e.empty())
            e = within("unit", t_distance(t_mul(TriCoeff::one(s.grid()), x), x), tol);
        return e;
    });
    run.property(S, "distributive", n, [&](Sampler& s) {
        const auto x = s.coeff(), y = s.coeff(), z = s.coeff();
        auto e = within("left", t_distance(t_mul(x, t_add(y, z)), t_add(t_mul(x, y), t_mul(x, z))), tol);
        if (e.empty())
            e = within("right", t_distance(t_mul(t_add(y, z), x), t_add(t_mul(y, x), t_mul(z, x))), tol);
        return e;
    });
    run.property(S, "reciprocal", n, [&](Sampler& s) {
        const auto x = s.coeff(), y = s.unit_coeff();
        auto e = within("y * 1/y", t_distance(t_mul(y, t_recip(y)), TriCoeff::one(s.grid())), 1e-12);
        if (e.empty())
            e = within("x/y vs x * 1/y", t_distance(t_div(x, y), t_mul(x, t_recip(y))), 1e-12);
        return e;
    });
    run.property(S, "nilpotent-epsilon", n, [&](Sampler& s) {
        const TriCoeff a(0.0, s.spectrum()), b(0.0, s.spectrum());
        return t_is_zero(t_mul(a, b), 0.0) ? std::string{} : std::string("eps*eps is not zero");
    });
}

inline void pole_suite(detail::Runner& run)
{
    const std::string S = "poles";
    run.fact(S, "white-point", [] {
        const auto sum = value(Pole::R) + value(Pole::G) + value(Pole::B);
        return detail::within("R+G+B", std::abs(sum), 1e-12);
    });
    run.fact(S, "equilateral-unit-circle", [] {
        for (Pole x : all_poles) {
            if (std::abs(std::abs(value(x)) - 1.0) > 1e-12)
                return std::string("pole off the unit circle");
            for (Pole y : all_poles)
                if (x != y && std::abs(std::abs(value(x) - value(y)) - std::sqrt(3.0)) > 1e-12)
                    return std::string("side length differs from sqrt 3");
        }
        return std::string{};
    });
    run.fact(S, "latin-and-commutative", [] {
        for (const auto& sq : all_latin_squares())
            if (!is_latin(sq) || !is_commutative(sq))
                return "square " + std::to_string(sq.index()) + " is not a symmetric Latin square";
        return std::string{};
    });
    run.fact(S, "identity-exactly-first-three", [] {
        for (const auto& sq : all_latin_squares())
            if (identity_pole(sq).has_value() != (sq.index() <= 3))
                return "square " + std::to_string(sq.index()) + " has the wrong identity status";
        return std::string{};
    });
    run.fact(S, "first-square-is-z3", [] {
        const auto& sq = latin_square(1);
        for (Pole x : all_poles)
            for (Pole y : all_poles)
                if (std::abs(value(sq(x, y)) - value(x) * value(y)) > 1e-12)
                    return std::string("composition disagrees with complex product at ") +
                           pole_name(x) + pole_name(y);
        return std::string{};
    });
}

inline void ring_suite(detail::Runner& run, const Operations& ops)
{
    const auto n = run.cfg().cases;
    const double tol = run.cfg().tol;
    const int sq = run.cfg().square;
    using detail::within;
    const std::string S = "ring";

    run.property(S, "additive-abelian-group", n, [&](Sampler& s) {
        const auto x = s.colour(sq), y = s.colour(sq), z = s.colour(sq);
        auto e = within("assoc", distance_mod_O(ops.add(ops.add(x, y), z), ops.add(x, ops.add(y, z))), tol);
        if (e.empty())
            e = within("comm", distance_mod_O(ops.add(x, y), ops.add(y, x)), tol);
        if (e.empty())
            e = within("zero", distance_mod_O(ops.add(x, s.achromatic(sq)), x), tol);
        if (e.empty())
            e = within("inverse", distance_mod_O(ops.add(x, ops.neg(x)), Colour::zero(s.grid(), sq)), tol);
        if (e.empty())
            e = within("double negation", distance_mod_O(ops.neg(ops.neg(x)), x), tol);
        return e;
    });
    run.property(S, "multiplicative-monoid", n, [&](Sampler& s) {
        const auto x = s.colour(sq), y = s.colour(sq), z = s.colour(sq);
        auto e = within("assoc", distance_mod_O(ops.mul(ops.mul(x, y), z), ops.mul(x, ops.mul(y, z))), tol);
        if (e.empty())
            e = within("comm", distance_mod_O(ops.mul(x, y), ops.mul(y, x)), tol);
        if (e.empty())
            e = within("unit", distance_mod_O(ops.mul(Colour::unit(s.grid(), sq), x), x), tol);
        return e;
    });
    run.property(S, "distributive", n, [&](Sampler& s) {
        const auto x = s.colour(sq), y = s.colour(sq), z = s.colour(sq);
        return within("x(y+z) vs xy+xz",
                      distance_mod_O(ops.mul(x, ops.add(y, z)), ops.add(ops.mul(x, y), ops.mul(x, z))),
                      tol);
    });
    run.property(S, "cancellation-law-stable", n, [&](Sampler& s) {
        const auto x = s.colour(sq), y = s.colour(sq);
        const auto l1 = s.achromatic(sq), l2 = s.achromatic(sq);
        auto e = within("(x+l1)(y+l2) vs xy",
                        distance_mod_O(ops.mul(ops.add(x, l1), ops.add(y, l2)), ops.mul(x, y)), tol);
        if (e.empty())
            e = within("(x+l1)+(y+l2) vs x+y",
                       distance_mod_O(ops.add(ops.add(x, l1), ops.add(y, l2)), ops.add(x, y)), tol);
        return e;
    });
}

inline void conjugation_suite(detail::Runner& run, const Operations& ops)
{
    const auto n = run.cfg().cases;
    const double tol = run.cfg().tol;
    using detail::within;
    const std::string S = "conjugation";

    run.property(S, "involution-and-automorphism", n, [&](Sampler& s) {
        const auto x = s.colour(1), y = s.colour(1);
        auto e = within("conj conj", distance_mod_O(ops.conj(ops.conj(x)), x), 0.0);
        if (e.empty())
            e = within("conj(x+y)", distance_mod_O(ops.conj(ops.add(x, y)), ops.add(ops.conj(x), ops.conj(y))), tol);
        if (e.empty())
            e = within("conj(xy)", distance_mod_O(ops.conj(ops.mul(x, y)), ops.mul(ops.conj(x), ops.conj(y))), tol);
        return e;
    });
    run.property(S, "norm-is-R-polarized", n, [&](Sampler& s) {
        const auto y = s.colour(1);
        const auto nrm = ops.mul(y, ops.conj(y));
        const double residue = polarization_residue(nrm, Pole::R);
        if (residue > tol)
            return "G/B residue " + detail::fmt(residue);
        return is_x_polarized(nrm, Pole::R, tol) ? std::string{} : std::string("R part below G/B");
    });
    run.property(S, "theta-matches-expansion", n, [&](Sampler& s) {
        const auto y = s.colour(1);
        const double u = y.r().q(), v = y.g().q(), t = y.b().q();
        const auto& sigma = y.r().psi();
        const auto& chi = y.g().psi();
        const auto& xi = y.b().psi();
        const double anchor = ((u - v) * (u - v) + (v - t) * (v - t) + (t - u) * (t - u)) / 2.0;
        const TriCoeff th = polarized_coefficient(ops.mul(y, ops.conj(y)), Pole::R, tol);
        auto e = within("real(theta) vs squared differences", std::abs(th.q() - anchor), tol);
        if (e.empty())
            e = within("real(theta) vs |phi|^2", std::abs(th.q() - std::norm(phi_chroma(y).z)), tol);
        for (std::size_t i = 0; e.empty() && i < sigma.size(); ++i) {
            const double expect = (u - v) * (sigma[i] - chi[i]) + (u - t) * (sigma[i] - xi[i]) +
                                  (v - t) * (chi[i] - xi[i]);
            e = within("eps(theta)", std::abs(th.psi()[i] - expect), tol);
        }
        return e;
    });
}

inline void ideal_suite(detail::Runner& run, const Operations& ops)
{
    const auto n = run.cfg().cases;
    const double tol = run.cfg().tol;
    const int sq = run.cfg().square;
    const std::string S = "ideal";

    run.property(S, "closed-under-addition", n, [&](Sampler& s) {
        return is_singular(ops.add(s.singular(sq), s.singular(sq)), tol) ? std::string{}
                                                                         : std::string("s+s' left S");
    });
    run.property(S, "absorbs-multiplication", n, [&](Sampler& s) {
        const auto sing = s.singular(sq);
        const auto y = s.colour(sq);
        if (!is_singular(ops.mul(sing, y), tol) || !is_singular(ops.mul(y, sing), tol))
            return "s*y left S for y = " + detail::describe(y);
        return std::string{};
    });
    run.property(S, "achromatic-inside-singular", n, [&](Sampler& s) {
        const auto l = s.achromatic(sq);
        if (!is_achromatic(l, tol) || !is_singular(l, tol))
            return std::string("O element not singular");
        const auto unit = Colour::unit(s.grid(), sq);
        if (is_singular(unit, tol))
            return std::string("unit is singular");
        return std::string{};
    });
    run.property(S, "singular-iff-theta-vanishes", n, [&](Sampler& s) {
        const auto y = s.chance(0.5) ? s.singular(1) : s.nonsingular(1);
        const auto nrm = ops.mul(y, ops.conj(y));
        const bool theta_zero = std::abs(nrm.r().q() - nrm.g().q()) <= tol;
        if (is_singular(y, tol) != theta_zero)
            return "disagreement at " + detail::describe(y);
        return std::string{};
    });
    run.property(S, "same-singular-set-for-cyclic-squares", n, [&](Sampler& s) {
        const auto base = s.chance(0.5) ? s.singular(1) : s.nonsingular(1);
        bool verdict[3];
        for (int k = 1; k <= 3; ++k) {
            const Colour y(k, base.r(), base.g(), base.b());
            verdict[k - 1] = std::abs(multiplier_determinant(y)) <= tol;
        }
        if (verdict[0] != verdict[1] || verdict[1] != verdict[2] || verdict[0] != is_singular(base, tol))
            return "squares disagree at " + detail::describe(base);
        return std::string{};
    });
}

inline void field_suite(detail::Runner& run, const Operations& ops)
{
    const auto n = run.cfg().cases;
    const double tol = run.cfg().tol;
    using detail::within;
    const std::string S = "field";

    run.property(S, "quotient-times-divisor", n, [&](Sampler& s) {
        const auto x = s.colour(1), y = s.nonsingular(1);
        return within("(x/y)y vs x", distance_mod_S(ops.mul(ops.mul(x, ops.recip(y, tol)), y), x), tol);
    });
    run.property(S, "chroma-of-quotient", n, [&](Sampler& s) {
        const auto x = s.colour(1), y = s.nonsingular(1);
        const Complex expect = phi_chroma(x).z / phi_chroma(y).z;
        return within("phi(x/y)", std::abs(phi_chroma(ops.mul(x, ops.recip(y, tol))).z - expect), tol);
    });
    run.property(S, "inverse-unique", n, [&](Sampler& s) {
        // y + s lies in the class of y mod S for singular s, so both inverses must agree.
        const auto y = s.nonsingular(1);
        const auto shifted = ops.add(y, s.singular(1));
        const auto a = ops.recip(y, tol);
        const auto b = ops.recip(shifted, tol);
        auto e = within("1/y vs 1/(y+s)", distance_mod_S(a, b), tol);
        if (e.empty())
            e = within("(1/(y+s)) y", distance_mod_S(ops.mul(b, y), Colour::unit(s.grid(), 1)), tol);
        return e;
    });
    run.property(S, "singular-divisor-rejected", n, [&](Sampler& s) {
        const auto y = s.singular(1);
        try {
            (void)ops.recip(y, tol);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::SingularDivisor)
                return std::string{};
            throw;
        }
        return "divided by singular " + detail::describe(y);
    });
}

inline void oracle_suite(detail::Runner& run, const Operations& ops)
{
    const auto n = run.cfg().cases;
    const double tol = run.cfg().tol;
    using detail::within;
    const std::string S = "oracle";

    run.property(S, "homomorphism", n, [&](Sampler& s) {
        const auto x = s.colour(1), y = s.colour(1);
        const auto px = phi_bicomplex(x), py = phi_bicomplex(y);
        auto e = within("add", distance(phi_bicomplex(ops.add(x, y)), px + py), tol);
        if (e.empty())
            e = within("mul", distance(phi_bicomplex(ops.mul(x, y)), px * py), tol);
        if (e.empty())
            e = within("neg", distance(phi_bicomplex(ops.neg(x)), -px), tol);
        if (e.empty())
            e = within("conj", distance(phi_bicomplex(ops.conj(x)), conj(px)), tol);
        return e;
    });
    run.property(S, "congruence-matches-kernel", n, [&](Sampler& s) {
        const auto x = s.colour(1);
        const auto y = s.chance(0.5) ? ops.add(x, s.achromatic(1)) : s.colour(1);
        const bool by_canon = eq_mod_O(x, y, tol);
        const bool by_phi = distance(phi_bicomplex(x), phi_bicomplex(y)) <= tol;
        return by_canon == by_phi ? std::string{} : std::string("mod O and Phi disagree");
    });
    run.property(S, "ideal-matches-chroma-kernel", n, [&](Sampler& s) {
        const auto x = s.colour(1);
        const auto y = s.chance(0.5) ? ops.add(x, s.singular(1)) : s.colour(1);
        const bool by_s = eq_mod_S(x, y, tol);
        const bool by_reals = is_singular(ops.add(x, ops.neg(y)), tol);
        return by_s == by_reals ? std::string{} : std::string("mod S and phi disagree");
    });
}

inline void diagnostics_suite(detail::Runner& run)
{
    const std::string S = "diagnostics";
    const Grid g = run.cfg().grid;
    run.fact(S, "hue-of-summed-curves", [&] {
        const auto sum = add(add(gaussian(g, 500, 20, 1.0), gaussian(g, 500, 40, 0.7)), gaussian(g, 500, 80, 0.4));
        return hue(sum) == 500.0 ? std::string{} : "hue " + detail::fmt(hue(sum));
    });
    run.fact(S, "saturation-falls-with-width", [&] {
        double prev = 2.0;
        for (double sigma : {10.0, 20.0, 40.0, 60.0}) {
            const double sat = saturation(gaussian(g, 580, sigma, 1.0));
            if (!(sat < prev))
                return "not decreasing at sigma " + detail::fmt(sigma);
            prev = sat;
        }
        return std::string{};
    });
    run.property(S, "scale-invariance", run.cfg().cases, [&](Sampler& s) {
        const auto curve = gaussian(g, s.uniform(420, 740), s.uniform(8, 60), s.uniform(0.1, 3));
        const double c = s.uniform(0.1, 10);
        const auto scaled = scale(curve, c);
        if (hue(scaled) != hue(curve))
            return std::string("hue moved");
        if (std::abs(saturation(scaled) - saturation(curve)) > 1e-9)
            return std::string("saturation moved");
        return detail::within("energy homogeneity", std::abs(integrate(scaled) - c * integrate(curve)),
                              1e-9 * std::max(1.0, std::abs(integrate(scaled))));
    });
}

/// Runs every suite. The conjugation, field and oracle suites are tied to
/// Latin square 1; the ring and ideal suites use `cfg.square`.
inline Report run_all(const Config& cfg, const Operations& ops = {})
{
    Report report;
    detail::Runner run(cfg, report);
    semifield_suite(run);
    pole_suite(run);
    ring_suite(run, ops);
    conjugation_suite(run, ops);
    ideal_suite(run, ops);
    field_suite(run, ops);
    oracle_suite(run, ops);
    diagnostics_suite(run);
    return report;
}

} // namespace tripolar::check
