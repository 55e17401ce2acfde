#pragma once

// Colour expression language.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := 'conj' '(' expr ')' | primary
//   primary := pole '[' coeff ']' | '(' expr ')'
//   pole    := 'R' | 'G' | 'B'
//   coeff   := number [('+' | '-') source 'e']
//   source  := number | 'csv:' path | 'gauss(' number ',' number ',' number ')'
//
// Binary operators associate to the left.

#include <cctype>
#include <cstdlib>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "tripolar/colourspace.hpp"
#include "tripolar/error.hpp"
#include "tripolar/spectra.hpp"

namespace tripolar::dsl {

class ParseError : public Error {
public:
    ParseError(ErrorKind kind, std::size_t line, std::size_t column, const std::string& msg)
        : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) +
                          ": " + msg),
          line_(line), column_(column)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct ConstantSource {
    double value;
};
struct CsvSource {
    std::string path;
};
struct GaussSource {
    double mu;
    double sigma;
    double amp;
};
using EpsSource = std::variant<ConstantSource, CsvSource, GaussSource>;

struct CoeffLiteral {
    double q = 0.0;
    double eps_sign = 1.0;
    EpsSource eps = ConstantSource{0.0};
};

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct PoleLiteral {
    Pole pole;
    CoeffLiteral coeff;
};
struct Binary {
    char op;
    ExprPtr lhs;
    ExprPtr rhs;
};
struct Conj {
    ExprPtr arg;
};

struct Expr {
    std::variant<PoleLiteral, Binary, Conj> node;
    Span span;
};

/// Parsed expression together with its source text, which error messages quote.
struct Program {
    std::string source;
    ExprPtr root;

    std::string_view text(const Span& s) const
    {
        return std::string_view(source).substr(s.begin, s.end - s.begin);
    }
};

namespace detail {

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    ExprPtr parse_all()
    {
        auto e = expr();
        skip_ws();
        if (pos_ != src_.size())
            fail("unexpected '" + std::string(1, src_[pos_]) + "'");
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const
    {
        fail_at(pos_, msg, kind);
    }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg,
                              ErrorKind kind = ErrorKind::SyntaxError) const
    {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(kind, line, col, msg);
    }

    void skip_ws()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) {
            if (pos_ >= src_.size())
                fail(std::string("expected '") + c + "' but input ended");
            fail(std::string("expected '") + c + "'");
        }
    }

    bool accept_word(std::string_view w)
    {
        skip_ws();
        if (src_.substr(pos_, w.size()) != w)
            return false;
        const std::size_t after = pos_ + w.size();
        if (after < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[after])) ||
                                    src_[after] == '_'))
            return false;
        pos_ = after;
        return true;
    }

    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    double number()
    {
        skip_ws();
        const std::size_t start = pos_;
        std::size_t i = pos_;
        if (i < src_.size() && (src_[i] == '+' || src_[i] == '-'))
            ++i;
        std::size_t digits = 0;
        while (i < src_.size() && is_digit(src_[i])) {
            ++i;
            ++digits;
        }
        if (i < src_.size() && src_[i] == '.') {
            ++i;
            while (i < src_.size() && is_digit(src_[i])) {
                ++i;
                ++digits;
            }
        }
        if (digits == 0)
            fail("expected a number");
        // Exponent only when digits follow, so the trailing 'e' marker survives.
        if (i < src_.size() && (src_[i] == 'e' || src_[i] == 'E')) {
            std::size_t j = i + 1;
            if (j < src_.size() && (src_[j] == '+' || src_[j] == '-'))
                ++j;
            if (j < src_.size() && is_digit(src_[j])) {
                while (j < src_.size() && is_digit(src_[j]))
                    ++j;
                i = j;
            }
        }
        const std::string lexeme(src_.substr(start, i - start));
        pos_ = i;
        return std::strtod(lexeme.c_str(), nullptr);
    }

    EpsSource source()
    {
        skip_ws();
        if (accept_word("gauss")) {
            expect('(');
            const double mu = number();
            expect(',');
            const std::size_t at = pos_;
            const double sigma = number();
            expect(',');
            const double amp = number();
            expect(')');
            if (!(sigma > 0.0))
                fail_at(at, "gauss sigma must be > 0", ErrorKind::NonPositiveSigma);
            return GaussSource{mu, sigma, amp};
        }
        if (src_.substr(pos_, 4) == "csv:") {
            pos_ += 4;
            const std::size_t start = pos_;
            while (pos_ < src_.size() && src_[pos_] != ']' &&
                   !std::isspace(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
            if (pos_ == start)
                fail("empty csv path");
            return CsvSource{std::string(src_.substr(start, pos_ - start))};
        }
        return ConstantSource{number()};
    }

    CoeffLiteral coeff()
    {
        CoeffLiteral c;
        skip_ws();
        const std::size_t at = pos_;
        c.q = number();
        if (c.q < 0.0)
            fail_at(at, "real part must be >= 0", ErrorKind::NegativeRealPart);
        if (peek('+') || peek('-')) {
            c.eps_sign = src_[pos_] == '-' ? -1.0 : 1.0;
            ++pos_;
            c.eps = source();
            if (!accept_word("e"))
                fail("expected the epsilon marker 'e'");
        }
        return c;
    }

    ExprPtr primary()
    {
        skip_ws();
        const std::size_t start = pos_;
        if (accept('(')) {
            auto inner = expr();
            expect(')');
            inner->span = {start, pos_};
            return inner;
        }
        if (pos_ < src_.size()) {
            if (auto p = pole_from_char(src_[pos_])) {
                ++pos_;
                expect('[');
                CoeffLiteral c = coeff();
                expect(']');
                return std::make_unique<Expr>(Expr{PoleLiteral{*p, c}, {start, pos_}});
            }
        }
        if (pos_ >= src_.size())
            fail("expected a colour but input ended");
        fail("expected R[...], G[...], B[...], conj(...) or '('");
    }

    ExprPtr unary()
    {
        skip_ws();
        const std::size_t start = pos_;
        if (accept_word("conj")) {
            expect('(');
            auto arg = expr();
            expect(')');
            return std::make_unique<Expr>(Expr{Conj{std::move(arg)}, {start, pos_}});
        }
        return primary();
    }

    ExprPtr term()
    {
        skip_ws();
        const std::size_t start = pos_;
        auto lhs = unary();
        while (peek('*') || peek('/')) {
            const char op = src_[pos_++];
            auto rhs = unary();
            lhs = std::make_unique<Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}, {start, pos_}});
        }
        return lhs;
    }

    ExprPtr expr()
    {
        skip_ws();
        const std::size_t start = pos_;
        auto lhs = term();
        while (peek('+') || peek('-')) {
            const char op = src_[pos_++];
            auto rhs = term();
            lhs = std::make_unique<Expr>(Expr{Binary{op, std::move(lhs), std::move(rhs)}, {start, pos_}});
        }
        return lhs;
    }
};

} // namespace detail

inline Program parse(std::string text)
{
    Program prog{std::move(text), nullptr};
    prog.root = detail::Parser(prog.source).parse_all();
    return prog;
}

struct EvalContext {
    Grid grid = Grid::visible();
    int square = 1;
    double tol = default_tolerance;
    bool resample = false;
};

namespace detail {

inline Spectrum materialize(const EpsSource& src, const EvalContext& ctx)
{
    return std::visit(
        [&](const auto& s) -> Spectrum {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, ConstantSource>)
                return constant(ctx.grid, s.value);
            else if constexpr (std::is_same_v<T, CsvSource>)
                return from_csv(s.path, ctx.grid, ctx.resample);
            else
                return gaussian(ctx.grid, s.mu, s.sigma, s.amp);
        },
        src);
}

inline Colour eval_node(const Program& prog, const Expr& e, const EvalContext& ctx)
{
    return std::visit(
        [&](const auto& n) -> Colour {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, PoleLiteral>) {
                Spectrum psi = scale(materialize(n.coeff.eps, ctx), n.coeff.eps_sign);
                return x_polarized(n.pole, TriCoeff(n.coeff.q, std::move(psi)), ctx.square);
            } else if constexpr (std::is_same_v<T, Conj>) {
                return c_conj(eval_node(prog, *n.arg, ctx));
            } else {
                const Colour lhs = eval_node(prog, *n.lhs, ctx);
                const Colour rhs = eval_node(prog, *n.rhs, ctx);
                switch (n.op) {
                    case '+': return c_add(lhs, rhs);
                    case '-': return c_sub(lhs, rhs);
                    case '*': return c_mul(lhs, rhs);
                    default:
                        try {
                            return c_div(lhs, rhs, ctx.tol);
                        } catch (const Error& err) {
                            if (err.kind() != ErrorKind::SingularDivisor)
                                throw;
                            throw Error(ErrorKind::SingularDivisor,
                                        "denominator '" + std::string(prog.text(n.rhs->span)) +
                                            "' lies in the achromatic ideal");
                        }
                }
            }
        },
        e.node);
}

} // namespace detail

/// Evaluates without canonicalizing.
inline Colour eval_raw(const Program& prog, const EvalContext& ctx)
{
    return detail::eval_node(prog, *prog.root, ctx);
}

/// Canonical representative of the expression's value.
inline Colour eval(const Program& prog, const EvalContext& ctx)
{
    return canonicalize(eval_raw(prog, ctx)).colour();
}

inline Colour eval(const std::string& text, const EvalContext& ctx)
{
    return eval(parse(text), ctx);
}

} // namespace tripolar::dsl
