#pragma once

// The three poles R, G, B as unit points of the complex plane, and the six
// commutative Latin squares over {R, G, B}.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "tripolar/error.hpp"

namespace tripolar {

enum class Pole : int { R = 0, G = 1, B = 2 };

inline constexpr std::array<Pole, 3> all_poles{Pole::R, Pole::G, Pole::B};

constexpr std::size_t index_of(Pole p) noexcept { return static_cast<std::size_t>(p); }

constexpr char pole_name(Pole p) noexcept
{
    switch (p) {
        case Pole::R: return 'R';
        case Pole::G: return 'G';
        case Pole::B: return 'B';
    }
    return '?';
}

inline std::optional<Pole> pole_from_char(char c) noexcept
{
    switch (c) {
        case 'R': return Pole::R;
        case 'G': return Pole::G;
        case 'B': return Pole::B;
        default: return std::nullopt;
    }
}

using PolePoint = std::complex<double>;

inline const double sqrt3_half = std::sqrt(3.0) / 2.0;

/// Vertices of the equilateral triangle: R = 1, G = -1/2 + (sqrt3/2)i, B = conj(G).
inline PolePoint value(Pole p)
{
    switch (p) {
        case Pole::R: return {1.0, 0.0};
        case Pole::G: return {-0.5, sqrt3_half};
        case Pole::B: return {-0.5, -sqrt3_half};
    }
    return {};
}

/// C, M, Y: the negated poles.
inline std::map<Pole, PolePoint> inverse_pole_points()
{
    return {
        {Pole::R, {-1.0, 0.0}},
        {Pole::G, {0.5, -sqrt3_half}},
        {Pole::B, {0.5, sqrt3_half}},
    };
}

constexpr std::string_view inverse_pole_name(Pole p) noexcept
{
    switch (p) {
        case Pole::R: return "C";
        case Pole::G: return "M";
        case Pole::B: return "Y";
    }
    return "?";
}

class LatinSquare {
public:
    using Table = std::array<std::array<Pole, 3>, 3>;

    constexpr LatinSquare(int index, Table table) : index_(index), table_(table) {}

    constexpr int index() const noexcept { return index_; }
    constexpr const Table& table() const noexcept { return table_; }

    constexpr Pole operator()(Pole x, Pole y) const noexcept
    {
        return table_[index_of(x)][index_of(y)];
    }

    friend constexpr bool operator==(const LatinSquare& a, const LatinSquare& b) noexcept
    {
        return a.index_ == b.index_;
    }

private:
    int index_;
    Table table_;
};

namespace detail {

using enum Pole;

// Row = left operand, column = right operand, both in R, G, B order.
inline constexpr std::array<LatinSquare, 6> squares{
    LatinSquare(1, {{{R, G, B}, {G, B, R}, {B, R, G}}}),
    LatinSquare(2, {{{G, B, R}, {B, R, G}, {R, G, B}}}),
    LatinSquare(3, {{{B, R, G}, {R, G, B}, {G, B, R}}}),
    LatinSquare(4, {{{R, B, G}, {B, G, R}, {G, R, B}}}),
    LatinSquare(5, {{{B, G, R}, {G, R, B}, {R, B, G}}}),
    LatinSquare(6, {{{G, R, B}, {R, B, G}, {B, G, R}}}),
};

} // namespace detail

inline const LatinSquare& latin_square(int index)
{
    if (index < 1 || index > 6)
        throw Error(ErrorKind::SquareMismatch,
                    "Latin square index " + std::to_string(index) + " outside 1..6");
    return detail::squares[static_cast<std::size_t>(index - 1)];
}

inline const std::array<LatinSquare, 6>& all_latin_squares() noexcept { return detail::squares; }

inline Pole compose(const LatinSquare& sq, Pole x, Pole y) noexcept { return sq(x, y); }

/// Pole Y with Y (x) X = X for every X, if the square has one.
inline std::optional<Pole> identity_pole(const LatinSquare& sq) noexcept
{
    for (Pole y : all_poles) {
        bool neutral = true;
        for (Pole x : all_poles)
            neutral = neutral && sq(y, x) == x;
        if (neutral)
            return y;
    }
    return std::nullopt;
}

inline bool is_latin(const LatinSquare& sq) noexcept
{
    for (std::size_t i = 0; i < 3; ++i) {
        std::array<int, 3> row{}, col{};
        for (std::size_t j = 0; j < 3; ++j) {
            ++row[index_of(sq.table()[i][j])];
            ++col[index_of(sq.table()[j][i])];
        }
        for (std::size_t k = 0; k < 3; ++k)
            if (row[k] != 1 || col[k] != 1)
                return false;
    }
    return true;
}

inline bool is_commutative(const LatinSquare& sq) noexcept
{
    for (Pole x : all_poles)
        for (Pole y : all_poles)
            if (sq(x, y) != sq(y, x))
                return false;
    return true;
}

inline bool is_associative(const LatinSquare& sq) noexcept
{
    for (Pole x : all_poles)
        for (Pole y : all_poles)
            for (Pole z : all_poles)
                if (sq(sq(x, y), z) != sq(x, sq(y, z)))
                    return false;
    return true;
}

/// Identity plus associativity over all 27 triples; inverses follow for a Latin square.
inline bool is_group(const LatinSquare& sq) noexcept
{
    return identity_pole(sq).has_value() && is_associative(sq);
}

inline bool admits_colour_product(const LatinSquare& sq) noexcept
{
    return sq.index() >= 1 && sq.index() <= 3;
}

/// Exponent k of the isomorphism pole -> Z3 for a group square: the identity
/// maps to 0 and the first non-identity pole in R, G, B order to 1. For the
/// first square this is R -> 0, G -> 1, B -> 2.
inline int pole_exponent(const LatinSquare& sq, Pole p)
{
    const auto e = identity_pole(sq);
    if (!e || !is_associative(sq))
        throw Error(ErrorKind::SquareMismatch,
                    "Latin square " + std::to_string(sq.index()) + " is not a group");
    if (p == *e)
        return 0;
    Pole gen = *e;
    for (Pole q : all_poles)
        if (q != *e) {
            gen = q;
            break;
        }
    return p == gen ? 1 : 2;
}

/// Pole X' with X (x) X' equal to the identity.
inline Pole group_inverse(const LatinSquare& sq, Pole p)
{
    const auto e = identity_pole(sq);
    if (!e)
        throw Error(ErrorKind::SquareMismatch, "square has no identity pole");
    for (Pole q : all_poles)
        if (sq(p, q) == *e)
            return q;
    throw Error(ErrorKind::SquareMismatch, "pole has no inverse");
}

} // namespace tripolar
