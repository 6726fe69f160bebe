#include <gtest/gtest.h>

#include "oracles.hpp"
#include "polycenter/catalog.hpp"
#include "polycenter/expr.hpp"
#include "polycenter/sampling.hpp"
#include "test_util.hpp"

using namespace polycenter;
using namespace polycenter::expr;

namespace {

double eval(const std::string& src, const Polygon& p) { return evaluate(parse(src), distance_matrix(p)); }

// Random expression tree rendered as source text.
std::string random_source(Rng& rng, int depth) {
    auto index = [&] {
        switch (uniform_index(rng, 3)) {
            case 0: return std::to_string(1 + uniform_index(rng, 4));
            case 1: return std::string("n");
            default: return "n-" + std::to_string(1 + uniform_index(rng, 3));
        }
    };
    if (depth == 0 || uniform_index(rng, 4) == 0) {
        switch (uniform_index(rng, 3)) {
            case 0: return std::to_string(uniform_index(rng, 9)) + "." + std::to_string(uniform_index(rng, 99));
            case 1: return "perim";
            default: {
                std::string i = index(), j = index();
                if (i == j) j = i + "+1";
                return "d(" + i + "," + j + ")";
            }
        }
    }
    const std::string a = random_source(rng, depth - 1);
    const std::string b = random_source(rng, depth - 1);
    switch (uniform_index(rng, 9)) {
        case 0: return a + " + " + b;
        case 1: return a + " - " + b;
        case 2: return a + " * " + b;
        case 3: return a + " / " + b;
        case 4: return a + " ^ " + b;
        case 5: return "-" + a;
        case 6: return "sqrt(" + a + ")";
        case 7: return "max(" + a + ", " + b + ", 1)";
        default: return "(" + a + ")";
    }
}

}  // namespace

TEST(Parse, PerimeterFunctionAst) {
    const auto pc = parse("d(n,1) + d(1,2)");
    ASSERT_EQ(pc.expr->op, Op::Add);
    const auto& lhs = *pc.expr->args[0];
    EXPECT_EQ(lhs.op, Op::Distance);
    EXPECT_EQ(lhs.i, (Index{true, 0}));
    EXPECT_EQ(lhs.j, (Index{false, 1}));
    EXPECT_EQ(pc.arity_policy, ArityPolicy::Generic);
    EXPECT_EQ(pc.min_n, 3u);
    EXPECT_TRUE(pc.compatible(3));
    EXPECT_TRUE(pc.compatible(12));
}

TEST(Parse, CircumcenterFunctionIsFixedToTriangles) {
    const auto pc = parse("d(1,2) * (d(2,3)^2 + d(3,1)^2 - d(1,2)^2)");
    EXPECT_EQ(pc.arity_policy, ArityPolicy::Fixed);
    EXPECT_EQ(pc.min_n, 3u);
    EXPECT_TRUE(pc.compatible(3));
    EXPECT_FALSE(pc.compatible(4));
    // c (a^2 + b^2 - c^2) on the 3-4-5 triangle: c = 3, a = 5, b = 4.
    EXPECT_DOUBLE_EQ(eval("d(1,2) * (d(2,3)^2 + d(3,1)^2 - d(1,2)^2)", tri345()), 3.0 * (25 + 16 - 9));
}

TEST(Parse, Precedence) {
    EXPECT_DOUBLE_EQ(eval("1 + 2 * 3", tri345()), 7.0);
    EXPECT_DOUBLE_EQ(eval("(1 + 2) * 3", tri345()), 9.0);
    EXPECT_DOUBLE_EQ(eval("2 ^ 3 ^ 2", tri345()), 512.0);
    EXPECT_DOUBLE_EQ(eval("-2 ^ 2", tri345()), -4.0);
    EXPECT_DOUBLE_EQ(eval("2 ^ -1", tri345()), 0.5);
    EXPECT_DOUBLE_EQ(eval("8 / 4 / 2", tri345()), 1.0);
    EXPECT_DOUBLE_EQ(eval("1 - 2 - 3", tri345()), -4.0);
    EXPECT_DOUBLE_EQ(eval("  sqrt( 16 )+abs(-1)", tri345()), 5.0);
    EXPECT_DOUBLE_EQ(eval("min(3, 1, 2) + max(1e1, 2.5E-1)", tri345()), 11.0);
    EXPECT_DOUBLE_EQ(eval("perim", tri345()), 12.0);
    EXPECT_DOUBLE_EQ(eval("perim()", tri345()), 12.0);
}

TEST(Parse, IndicesWrap) {
    EXPECT_DOUBLE_EQ(eval("d(n+1, 2)", tri345()), 3.0);
    EXPECT_DOUBLE_EQ(eval("d(n-1, n)", tri345()), 5.0);
    EXPECT_DOUBLE_EQ(eval("d(n, 1)", tri345()), 4.0);
}

TEST(Parse, SyntaxErrorsCarryPositions) {
    for (const std::string bad : {"", "1 +", "d(1,2", "d(1 2)", "foo(1)", "1 $ 2", "(1", "min()", "d(,1)", "1 2"}) {
        try {
            parse(bad);
            ADD_FAILURE() << "accepted '" << bad << "'";
        } catch (const ParseError& e) {
            EXPECT_EQ(e.kind(), ErrorKind::SyntaxError) << bad;
            EXPECT_LE(e.position(), bad.size()) << bad;
        }
    }
    try {
        parse("1 + foo");
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Parse, RepeatedIndexIsAnIndexError) {
    EXPECT_ERROR_KIND(parse("d(1,1)"), ErrorKind::IndexError);
    EXPECT_ERROR_KIND(parse("d(n,n)"), ErrorKind::IndexError);
    EXPECT_ERROR_KIND(parse("d(0,1)"), ErrorKind::IndexError);
}

TEST(Evaluate, Fixtures) {
    EXPECT_DOUBLE_EQ(eval("d(n,1) + d(1,2)", tri345()), 7.0);
    EXPECT_DOUBLE_EQ(eval("1", tri345()), 1.0);
    EXPECT_DOUBLE_EQ(eval("1", unit_square()), 1.0);
}

TEST(Evaluate, GuardedFailures) {
    EXPECT_ERROR_KIND(eval("1 / (d(1,2) - 3)", tri345()), ErrorKind::EvalError);
    EXPECT_ERROR_KIND(eval("sqrt(d(1,2) - 4)", tri345()), ErrorKind::EvalError);
    EXPECT_ERROR_KIND(eval("(-d(1,2)) ^ 0.5", tri345()), ErrorKind::EvalError);
    EXPECT_ERROR_KIND(eval("d(1, 4)", tri345()), ErrorKind::DomainViolation);
    EXPECT_ERROR_KIND(eval("d(1,2)", unit_square()), ErrorKind::DomainViolation);
    // Distinct symbols that name the same vertex when n = 4.
    EXPECT_ERROR_KIND(eval("d(n-1, 3)", unit_square()), ErrorKind::EvalError);
    EXPECT_DOUBLE_EQ(eval("d(n-1, 3)", regular_polygon(5)), distance(regular_polygon(5)[3], regular_polygon(5)[2]));
    EXPECT_ERROR_KIND(parse("d(n+3, 3)"), ErrorKind::IndexError);
}

TEST(Printer, ParsePrintParseFixpoint) {
    Rng rng(12);
    for (int t = 0; t < 500; ++t) {
        const std::string src = random_source(rng, 4);
        const auto first = parse(src);
        const std::string printed = to_string(*first.expr);
        const auto second = parse(printed);
        ASSERT_TRUE(structurally_equal(*first.expr, *second.expr)) << src << "  =>  " << printed;
        EXPECT_EQ(to_string(*second.expr), printed);
        EXPECT_EQ(first.arity_policy, second.arity_policy);
        EXPECT_EQ(first.min_n, second.min_n);
    }
}

TEST(Printer, ConstantsRoundTripExactly) {
    const auto pc = parse("0.1 + 1e-300 + 123456789.123456789");
    const auto again = parse(to_string(*pc.expr));
    EXPECT_TRUE(structurally_equal(*pc.expr, *again.expr));
}

TEST(CenterFunction, ParsedPerimeterMatchesBuiltIn) {
    Rng rng(13);
    const auto f = to_center_function(parse("d(n,1) + d(1,2)"));
    for (int t = 0; t < 100; ++t) {
        const auto p = random_convex_polygon(rng, 3 + t % 9);
        EXPECT_EQ(coordinate_map(f, p).coords(), coordinate_map(perimeter_function(), p).coords());
    }
}

TEST(CenterFunction, ThreeFourFiveTriangle) {
    const auto f = to_center_function(parse("d(n,1) + d(1,2)"));
    EXPECT_EQ(coordinate_map(f, tri345()).coords(), (std::vector<double>{7, 8, 9}));
    EXPECT_TRUE(PointNear(geometric_center(f, tri345()), {1.0, 1.5}, 1e-12));
}

TEST(Admit, AcceptsSymmetricFunctions) {
    const auto a = admit(parse("d(n,1)+d(1,2)"), 6, 1);
    EXPECT_TRUE(a.report.ok());
    ASSERT_TRUE(a.report.estimated_degree.has_value());
    EXPECT_NEAR(*a.report.estimated_degree, 1.0, 1e-9);

    const auto perim = admit(parse("d(1,2)+d(2,3)+d(3,4)+d(4,5)+d(5,1)"), 5, 2);
    EXPECT_TRUE(perim.report.relabel_ok);

    // a^2 (b^2 + c^2 - a^2) with a the side opposite V1.
    const auto circ = admit(parse("d(2,3)^2 * (d(3,1)^2 + d(1,2)^2 - d(2,3)^2)"), 3, 3);
    EXPECT_NEAR(*circ.report.estimated_degree, 4.0, 1e-9);
    EXPECT_EQ(coordinate_map(circ.function, tri345()).coords(),
              coordinate_map(circumcenter_function(), tri345()).coords());
}

TEST(Admit, LeadingSideMustBeOppositeTheVertex) {
    // With d(1,2) in front, sigma (which swaps 2 and 3) changes the value.
    EXPECT_THROW(admit(parse("d(1,2) * (d(2,3)^2 + d(3,1)^2 - d(1,2)^2)"), 3, 3), AxiomViolation);
}

TEST(Admit, RejectsTheFirstSideWithAWitness) {
    try {
        admit(parse("d(1,2)"), 3, 4);
        FAIL() << "d(1,2) admitted";
    } catch (const AxiomViolation& e) {
        EXPECT_EQ(e.kind(), ErrorKind::AxiomViolation);
        EXPECT_EQ(e.property(), "relabel");
        ASSERT_TRUE(e.witness().has_value());
        const auto& w = *e.witness();
        // Scalene: sigma swaps d(1,2) with d(1,3), and they differ on the witness.
        EXPECT_GT(std::abs(distance(w[0], w[1]) - distance(w[0], w[2])), 1e-9);
    }
}

TEST(Admit, RejectsMixedDegree) {
    try {
        admit(parse("d(n,1) + d(1,2) + d(n,1) * d(1,2)"), 5, 5);
        FAIL() << "mixed degree admitted";
    } catch (const AxiomViolation& e) {
        EXPECT_EQ(e.property(), "homogeneity");
    }
}

TEST(Admit, IncompatibleArity) {
    EXPECT_ERROR_KIND(admit(parse("d(1,2)+d(2,3)+d(3,1)"), 4, 1), ErrorKind::DomainViolation);
}
