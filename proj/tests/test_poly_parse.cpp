#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "apolab/harmonic.hpp"
#include "apolab/parse.hpp"
#include "apolab/poly.hpp"
#include "test_util.hpp"

using namespace apolab;

namespace {
const VariableFrame X3 = VariableFrame::x(3);
const VariableFrame Y3 = VariableFrame::y(3);
const VariableFrame UVZ = VariableFrame::uvz();
}  // namespace

TEST_CASE("parsing literal forms") {
    Poly q3 = parse_poly("x1^2+x2^2+x3^2", X3);
    CHECK(q3.term_count() == 3);
    for (const auto& [m, c] : q3.terms()) CHECK(c == GaussianRational(1));
    CHECK(q3 == frame_quadric(X3));

    Poly u = parse_poly("y1+i*y2", Y3);
    CHECK(u == isotropic_linear_form(3, false));

    Poly zero = parse_poly("0", UVZ);
    CHECK(zero.is_zero());
    CHECK(zero.terms().empty());
}

TEST_CASE("parser accepts the printer's coefficient spellings") {
    CHECK(parse_poly("z^2/2 - u*v", UVZ) ==
          parse_poly("1/2*z^2 - u*v", UVZ));
    CHECK(parse_poly("2i", X3) == Poly::constant(X3, GaussianRational(Rational(0), Rational(2))));
    CHECK(parse_poly("3/4i", X3) ==
          Poly::constant(X3, GaussianRational(Rational(0), Rational(3, 4))));
    CHECK(parse_poly("(1-2i)*x1", X3) ==
          Poly::variable(X3, 0).scaled(GaussianRational(Rational(1), Rational(-2))));
    CHECK(parse_poly("(x1+x2)^2", X3) ==
          parse_poly("x1^2+2*x1*x2+x2^2", X3));
    CHECK(parse_poly("x1^0", X3) == Poly::constant(X3, GaussianRational(1)));
    CHECK(parse_poly(" x1 + 2 * x2 ", X3) == parse_poly("x1+2*x2", X3));
}

TEST_CASE("parser reports positions and unknown variables") {
    CHECK_THROWS_AS(parse_poly("x1^", X3), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 + ", X3), ParseError);
    CHECK_THROWS_AS(parse_poly("x4", X3), ParseError);
    CHECK_THROWS_AS(parse_poly("u", X3), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^-2", X3), ParseError);
    CHECK_THROWS_AS(parse_poly("x1/x2", X3), ParseError);
    CHECK_THROWS_AS(parse_poly("x1/0", X3), ParseError);
    try {
        parse_poly("x1 + w2", X3);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("ring arithmetic identities") {
    CHECK(parse_poly("(x1+x2)*(x1-x2)", X3) == parse_poly("x1^2-x2^2", X3));
    // the binary quadric as a product of its isotropic factors
    const VariableFrame X2 = VariableFrame::x(2);
    Poly prod = parse_poly("(x1+i*x2)*(x1-i*x2)", X2);
    CHECK(prod == frame_quadric(X2));
    CHECK(quadric_power(X3, 0) == Poly::constant(X3, GaussianRational(1)));
}

TEST_CASE("degree additivity for homogeneous products") {
    std::mt19937_64 rng(201);
    for (int t = 0; t < 30; ++t) {
        Poly a = testing::random_form(X3, 2 + t % 3, rng);
        Poly b = testing::random_form(X3, 1 + t % 4, rng);
        Poly p = a * b;
        REQUIRE(!p.is_zero());
        CHECK(*p.homogeneous_degree() ==
              *a.homogeneous_degree() + *b.homogeneous_degree());
    }
}

TEST_CASE("frame mismatch is rejected") {
    Poly a = parse_poly("x1", X3);
    Poly b = parse_poly("y1", Y3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("print then parse is the identity on the term map") {
    std::mt19937_64 rng(202);
    for (const VariableFrame& frame : {X3, Y3, UVZ, VariableFrame::x(2), VariableFrame::y(4)}) {
        for (int t = 0; t < 40; ++t) {
            Poly p = testing::random_poly(frame, 5, 6, rng);
            CHECK(parse_poly(p.to_string(), frame) == p);
        }
    }
}

TEST_CASE("printing uses descending graded-lex order and display order u,z,v") {
    CHECK(parse_poly("u*z + z^2 + v", UVZ).to_string() == "z^2 + u*z + v");
    CHECK(parse_poly("x2^2 + x1^2", X3).to_string() == "x1^2 + x2^2");
    CHECK(parse_poly("-u*v + 1/2*z^2", UVZ).to_string() == "z^2/2 - u*v");
}

TEST_CASE("substituting the half isotropic frame sends u*v to (y1^2+y2^2)/4") {
    // frozen by hand: ((y1+iy2)/2)((y1-iy2)/2) = (y1^2+y2^2)/4
    Poly uv = parse_poly("u*v", UVZ);
    Poly image = uvz_to_y(uv);
    CHECK(image == parse_poly("1/4*y1^2 + 1/4*y2^2", Y3));
}

TEST_CASE("identity substitution and single-variable renames") {
    std::mt19937_64 rng(203);
    std::vector<Poly> identity;
    for (std::size_t v = 0; v < 3; ++v) identity.push_back(Poly::variable(X3, v));
    for (int t = 0; t < 10; ++t) {
        Poly p = testing::random_poly(X3, 4, 5, rng);
        CHECK(change_frame(p, X3, identity) == p);
    }
    // z -> y3 rename inside the uvz -> y substitution
    for (unsigned d = 1; d <= 5; ++d) {
        Poly zd = Poly::monomial(UVZ, MultiIndex{d, 0, 0});
        Poly y3d = Poly::monomial(Y3, MultiIndex{0, 0, d});
        CHECK(uvz_to_y(zd) == y3d);
    }
}

TEST_CASE("frame change round trip is the identity up to degree six") {
    std::mt19937_64 rng(204);
    for (int t = 0; t < 40; ++t) {
        Poly p = testing::random_poly(UVZ, 6, 7, rng);
        CHECK(y_to_uvz(uvz_to_y(p)) == p);
    }
    for (int t = 0; t < 40; ++t) {
        Poly p = testing::random_poly(Y3, 6, 7, rng);
        CHECK(uvz_to_y(y_to_uvz(p)) == p);
    }
}

TEST_CASE("frame change agrees with evaluation at random points") {
    // independent oracle: a ring homomorphism commutes with evaluation
    std::mt19937_64 rng(205);
    const auto images = uvz_to_y_images();
    for (int t = 0; t < 25; ++t) {
        Poly p = testing::random_poly(UVZ, 5, 6, rng);
        Poly q = uvz_to_y(p);
        std::vector<GaussianRational> ypoint = {testing::random_gaussian(rng),
                                                testing::random_gaussian(rng),
                                                testing::random_gaussian(rng)};
        std::vector<GaussianRational> uvzpoint;
        for (const auto& img : images) uvzpoint.push_back(img.evaluate(ypoint));
        CHECK(p.evaluate(uvzpoint) == q.evaluate(ypoint));
    }
}

TEST_CASE("frame change is a ring homomorphism") {
    std::mt19937_64 rng(206);
    for (int t = 0; t < 20; ++t) {
        Poly a = testing::random_poly(UVZ, 3, 4, rng);
        Poly b = testing::random_poly(UVZ, 3, 4, rng);
        CHECK(uvz_to_y(a * b) == uvz_to_y(a) * uvz_to_y(b));
        CHECK(uvz_to_y(a + b) == uvz_to_y(a) + uvz_to_y(b));
    }
}

TEST_CASE("invalid substitutions are rejected") {
    std::vector<Poly> degenerate = {Poly::variable(Y3, 0), Poly::variable(Y3, 0),
                                    Poly::variable(Y3, 2)};
    Poly p = parse_poly("u+v", UVZ);
    CHECK_THROWS_AS(change_frame(p, Y3, degenerate), std::invalid_argument);

    std::vector<Poly> quadratic = {parse_poly("y1^2", Y3), Poly::variable(Y3, 1),
                                   Poly::variable(Y3, 2)};
    CHECK_THROWS_AS(change_frame(p, Y3, quadratic), std::invalid_argument);

    std::vector<Poly> affine = {parse_poly("y1+1", Y3), Poly::variable(Y3, 1),
                                Poly::variable(Y3, 2)};
    CHECK_THROWS_AS(change_frame(p, Y3, affine), std::invalid_argument);
}
