#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "tripolar/dsl.hpp"

using namespace tripolar;
using namespace tripolar::dsl;

namespace {

const Grid grid = Grid::visible();

Colour rgb(double r, double g, double b)
{
    return Colour(1, TriCoeff::real(grid, r), TriCoeff::real(grid, g), TriCoeff::real(grid, b));
}

ErrorKind failure_kind(const std::string& text, const EvalContext& ctx = {})
{
    try {
        eval(text, ctx);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for " << text;
    return ErrorKind::Io;
}

} // namespace

TEST(Parse, CoefficientForms)
{
    const auto prog = parse("R[1] + G[0.5 + gauss(520,20,0.3) e]");
    const auto& sum = std::get<Binary>(prog.root->node);
    EXPECT_EQ(sum.op, '+');
    const auto& g = std::get<PoleLiteral>(sum.rhs->node);
    EXPECT_EQ(g.pole, Pole::G);
    EXPECT_EQ(g.coeff.q, 0.5);
    const auto& src = std::get<GaussSource>(g.coeff.eps);
    EXPECT_EQ(src.mu, 520.0);
    EXPECT_EQ(src.sigma, 20.0);
    EXPECT_EQ(src.amp, 0.3);
    EXPECT_EQ(prog.text(sum.rhs->span), "G[0.5 + gauss(520,20,0.3) e]");
}

TEST(Parse, ProductBindsTighterThanSum)
{
    const auto prog = parse("R[1] * (G[1] + B[2])");
    const auto& mul = std::get<Binary>(prog.root->node);
    EXPECT_EQ(mul.op, '*');
    EXPECT_EQ(std::get<Binary>(mul.rhs->node).op, '+');

    const auto flat = parse("R[1] + G[1] * B[2]");
    const auto& add = std::get<Binary>(flat.root->node);
    EXPECT_EQ(add.op, '+');
    EXPECT_EQ(std::get<Binary>(add.rhs->node).op, '*');
}

TEST(Parse, LeftAssociative)
{
    const auto prog = parse("R[1] - G[1] - B[1]");
    const auto& outer = std::get<Binary>(prog.root->node);
    EXPECT_TRUE(std::holds_alternative<Binary>(outer.lhs->node));
    EXPECT_TRUE(std::holds_alternative<PoleLiteral>(outer.rhs->node));
}

TEST(Parse, ConjBindsTightest)
{
    const auto prog = parse("conj(G[1]) * B[2]");
    const auto& mul = std::get<Binary>(prog.root->node);
    EXPECT_TRUE(std::holds_alternative<Conj>(mul.lhs->node));
}

TEST(Parse, ScientificNumbersAndEpsilonMarker)
{
    const auto prog = parse("R[1e-3 + 2.5e1 e]");
    const auto& lit = std::get<PoleLiteral>(prog.root->node);
    EXPECT_EQ(lit.coeff.q, 1e-3);
    EXPECT_EQ(std::get<ConstantSource>(lit.coeff.eps).value, 25.0);
}

TEST(Parse, NegativeRealPartRejected)
{
    try {
        parse("R[-1]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NegativeRealPart);
        EXPECT_EQ(e.line(), 1u);
        EXPECT_EQ(e.column(), 3u);
    }
}

TEST(Parse, SyntaxErrorsCarryPosition)
{
    const auto where = [](const std::string& text) {
        try {
            parse(text);
        } catch (const ParseError& e) {
            EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << text;
            return std::make_pair(e.line(), e.column());
        }
        ADD_FAILURE() << "parsed " << text;
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };
    EXPECT_EQ(where("R[1] +"), std::make_pair(std::size_t{1}, std::size_t{7}));
    EXPECT_EQ(where("R[1] + Q[2]"), std::make_pair(std::size_t{1}, std::size_t{8}));
    EXPECT_EQ(where("R[1]\n  * (G[1]"), std::make_pair(std::size_t{2}, std::size_t{10}));
    EXPECT_EQ(where("R[1 + gauss(1,2,3)]"), std::make_pair(std::size_t{1}, std::size_t{19}));
    EXPECT_EQ(where("R[1] G[1]"), std::make_pair(std::size_t{1}, std::size_t{6}));
    EXPECT_EQ(where("conj R[1]").first, 1u);
}

TEST(Parse, GaussSigmaMustBePositive)
{
    try {
        parse("R[1 + gauss(500,0,1) e]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NonPositiveSigma);
    }
}

TEST(Eval, GreenSquaredIsBlue)
{
    EXPECT_TRUE(eq_mod_O(eval("G[1] * G[1]", {}), rgb(0, 0, 1)));
}

TEST(Eval, UnitOverUnit)
{
    EXPECT_TRUE(eq_mod_O(eval("R[1] / R[1]", {}), rgb(1, 0, 0)));
}

TEST(Eval, ResultIsCanonical)
{
    const auto c = eval("R[2] + G[1] + B[1]", {});
    EXPECT_EQ(c.r().q(), 1.0);
    EXPECT_EQ(c.g().q(), 0.0);
    EXPECT_EQ(c.b().q(), 0.0);
}

TEST(Eval, SingularDivisorNamesSubexpression)
{
    try {
        eval("R[1] / (R[2]+G[2]+B[2])", {});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularDivisor);
        EXPECT_NE(std::string(e.what()).find("(R[2]+G[2]+B[2])"), std::string::npos) << e.what();
    }
}

TEST(Eval, ConjugationAndSquares)
{
    EXPECT_TRUE(eq_mod_O(eval("conj(G[2] + B[1])", {}), rgb(0, 1, 2)));
    EvalContext second;
    second.square = 2;
    EXPECT_EQ(failure_kind("conj(G[1])", second), ErrorKind::SquareMismatch);
    // Under square 2 the identity is B and R*R = G.
    EXPECT_TRUE(eq_mod_O(eval("R[1] * R[1]", second), Colour(2, TriCoeff::real(grid, 0),
                                                             TriCoeff::real(grid, 1), TriCoeff::real(grid, 0))));
}

TEST(Eval, EpsilonSources)
{
    const auto c = eval_raw(parse("R[1 + gauss(520,20,0.3) e] + G[0 - 2 e]"), {});
    EXPECT_TRUE(approx_eq(c.r().psi(), gaussian(grid, 520, 20, 0.3), 0.0));
    EXPECT_TRUE(approx_eq(c.g().psi(), constant(grid, -2.0), 0.0));
}

TEST(Eval, CsvSourceAndGridChecks)
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto on_grid = (dir / "tripolar_dsl_on_grid.csv").string();
    const auto coarse = (dir / "tripolar_dsl_coarse.csv").string();
    to_csv(gaussian(grid, 600, 25, 0.8), on_grid);
    {
        std::ofstream out(coarse);
        out << "f,value\n300,0\n800,5\n";
    }
    const auto c = eval_raw(parse("B[0.2 + csv:" + on_grid + " e]"), {});
    EXPECT_TRUE(approx_eq(c.b().psi(), gaussian(grid, 600, 25, 0.8), 1e-12));

    EXPECT_EQ(failure_kind("B[0.2 + csv:" + coarse + " e]"), ErrorKind::GridMismatch);
    EvalContext loose;
    loose.resample = true;
    const auto r = eval_raw(parse("B[0.2 + csv:" + coarse + " e]"), loose);
    EXPECT_NEAR(r.b().psi()[0], 0.8, 1e-12);

    EXPECT_EQ(failure_kind("B[0.2 + csv:/nonexistent/file.csv e]"), ErrorKind::Io);
    std::filesystem::remove(on_grid);
    std::filesystem::remove(coarse);
}
