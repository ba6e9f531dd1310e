#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "apolab/apolarity.hpp"
#include "apolab/certify.hpp"
#include "apolab/harmonic.hpp"
#include "apolab/parse.hpp"
#include "apolab/util.hpp"
#include "test_util.hpp"

using namespace apolab;

namespace {
const VariableFrame UVZ = VariableFrame::uvz();
const VariableFrame X3 = VariableFrame::x(3);
}  // namespace

TEST_CASE("ladder ideal generators") {
    GradedIdealPresentation d2 = ladder_ideal(2);
    REQUIRE(d2.generators().size() == 3);
    CHECK(d2.generators()[0] == parse_poly("u^2/2", UVZ));
    CHECK(d2.generators()[1] == parse_poly("u*z", UVZ));
    CHECK(d2.generators()[2] == parse_poly("z^2/2 - u*v", UVZ));

    GradedIdealPresentation d1 = ladder_ideal(1);
    REQUIRE(d1.generators().size() == 2);
    CHECK(d1.generators()[0] == parse_poly("u", UVZ));
    CHECK(d1.generators()[1] == parse_poly("z", UVZ));

    CHECK(ladder_ideal(5).generators().size() == 6);
    CHECK_THROWS_AS(ladder_ideal(0), std::invalid_argument);
}

TEST_CASE("certificates for the first powers") {
    for (unsigned s = 1; s <= 3; ++s) {
        BorderRankCertificate cert = certify_border_rank_q3(s);
        const long long r = binomial(s + 2, 2);
        CHECK(cert.conclusion == r);
        CHECK(cert.r == static_cast<unsigned>(r));
        CHECK(cert.generator_count == s + 2);
        CHECK(cert.all_checks_pass());
        CHECK(cert.checks.catalecticant_rank == static_cast<std::size_t>(r));
        CHECK(cert.checks.saturation_iterations == 1);
        CHECK(cert.checks.hilbert.stable_from <= s);
        CHECK(cert.checks.hilbert.stable_value == r);
    }
}

TEST_CASE("certificates are deterministic byte for byte") {
    BorderRankCertificate a = certify_border_rank_q3(2);
    BorderRankCertificate b = certify_border_rank_q3(2);
    CHECK(a.to_json(false).dump(2) == b.to_json(false).dump(2));
}

TEST_CASE("certificates are self-contained: recorded data reproduces every check") {
    for (unsigned s = 1; s <= 3; ++s) {
        auto doc = certify_border_rank_q3(s).to_json();
        CHECK(reverify_certificate(doc));
    }
    // tampering with a recorded generator breaks reverification
    auto doc = certify_border_rank_q3(2).to_json();
    doc["generators"][0] = "u^3 + v^3";
    CHECK_FALSE(reverify_certificate(doc));
}

TEST_CASE("certificate rank agrees with the lower-bound scan") {
    for (unsigned s = 1; s <= 5; ++s) {
        BorderRankCertificate cert = certify_border_rank_q3(s);
        CHECK(cert.checks.catalecticant_rank == sylvester_lower_bound(quadric_power(X3, s)));
    }
}

TEST_CASE("generators are harmonic and annihilate the form: two routes") {
    for (unsigned s = 1; s <= 3; ++s) {
        const Poly qpow = quadric_power(X3, s);
        const GradedIdealPresentation ideal = ladder_ideal(s + 1);
        for (const auto& g : ideal.generators()) {
            CHECK(laplacian(g).is_zero());
            CHECK(contract(uvz_to_y(g), qpow).is_zero());
        }
    }
}

TEST_CASE("classification of ternary quadratics") {
    QuadraticClassification r1 = classify_ternary_quadratic(parse_poly("x1^2", X3));
    CHECK(r1.matrix_rank == 1);
    for (unsigned s = 1; s <= 5; ++s) CHECK(r1.brk(s) == 1);
    CHECK(r1.formula() == "1");

    QuadraticClassification r2 = classify_ternary_quadratic(parse_poly("x1^2+x2^2", X3));
    CHECK(r2.matrix_rank == 2);
    for (unsigned s = 1; s <= 5; ++s) CHECK(r2.brk(s) == s + 1);

    QuadraticClassification r3 = classify_ternary_quadratic(parse_poly("x1*x2+x3^2", X3));
    CHECK(r3.matrix_rank == 3);
    CHECK(r3.brk(2) == 6);
    CHECK(r3.formula() == "(s+1)(s+2)/2");

    CHECK_THROWS_AS(classify_ternary_quadratic(Poly(X3)), std::invalid_argument);
    CHECK_THROWS_AS(classify_ternary_quadratic(parse_poly("x1^3", X3)), std::invalid_argument);
    CHECK_THROWS_AS(classify_ternary_quadratic(parse_poly("x1^2+x2", X3)), std::invalid_argument);
}

TEST_CASE("binary apolar generator pencil") {
    Q2ApolarGenerator g3 = q2_apolar_generator(3, 0.0, 0.0);
    REQUIRE(g3.exact.has_value());
    CHECK(*g3.exact == isotropic_linear_form(2, false).pow(4) - isotropic_linear_form(2, true).pow(4));
    CHECK(contract(*g3.exact, quadric_power(VariableFrame::x(2), 3)).is_zero());

    Q2ApolarGenerator g4 = q2_apolar_generator(4, 0.0, 0.0);
    REQUIRE(g4.exact.has_value());
    CHECK(*g4.exact == isotropic_linear_form(2, false).pow(5) - isotropic_linear_form(2, true).pow(5));

    // root parameters of the generic pencil member at s = 1
    const double pi = std::acos(-1.0);
    Q2ApolarGenerator g1 = q2_apolar_generator(1, 0.7, 0.3);
    auto w = g1.root_parameters();
    REQUIRE(w.size() == 2);
    CHECK(std::abs(w[0] - std::complex<double>(0.7 / 4, 0.3 / 4)) < 1e-15);
    CHECK(std::abs(w[1] - std::complex<double>((2 * pi + 0.7) / 4, 0.3 / 4)) < 1e-15);
    CHECK_FALSE(g1.exact.has_value());
    CHECK(std::abs(g1.coeff_v_power + std::exp(std::complex<double>(-0.3, 0.7))) < 1e-15);
}

TEST_CASE("the two-point decomposition of the binary quadric") {
    Q2Decomposition dec = decompose_q2(1, 0.0, 0.0, 1e-12);
    REQUIRE(dec.points.size() == 2);
    CHECK(dec.residual < 1e-12);
    CHECK(std::abs(dec.radius - 0.5) < 1e-15);
    // 2r = 1: the points are (1, 0) and (0, 1)
    CHECK(std::abs(dec.points[0][0] - 1.0) < 1e-12);
    CHECK(std::abs(dec.points[0][1]) < 1e-12);
    CHECK(std::abs(dec.points[1][0]) < 1e-12);
    CHECK(std::abs(dec.points[1][1] - 1.0) < 1e-12);
}

TEST_CASE("decomposition point counts and distinctness") {
    for (unsigned s = 1; s <= 6; ++s) {
        Q2Decomposition dec = decompose_q2(s, 0.0, 0.0, 1e-9);
        CHECK(dec.points.size() == s + 1);
        for (std::size_t i = 0; i < dec.points.size(); ++i)
            for (std::size_t j = i + 1; j < dec.points.size(); ++j) {
                const auto cross = dec.points[i][0] * dec.points[j][1] -
                                   dec.points[i][1] * dec.points[j][0];
                CHECK(std::abs(cross) > 1e-9);  // distinct as projective points
            }
    }
    // the point count realizes the rank-2 border rank formula s + 1
    QuadraticClassification r2 = classify_ternary_quadratic(parse_poly("x1^2+x2^2", X3));
    for (unsigned s = 1; s <= 4; ++s)
        CHECK(decompose_q2(s, 0.0, 0.0, 1e-9).points.size() ==
              static_cast<std::size_t>(r2.brk(s)));
}

TEST_CASE("doubled decomposition points form a regular polygon") {
    Q2Decomposition dec = decompose_q2(3, 0.0, 0.0, 1e-9);
    std::vector<double> angles;
    for (const auto& p : dec.points) {
        angles.push_back(std::atan2(p[1].real(), p[0].real()));
        angles.push_back(std::atan2(-p[1].real(), -p[0].real()));
    }
    std::sort(angles.begin(), angles.end());
    const double pi = std::acos(-1.0);
    for (std::size_t i = 1; i < angles.size(); ++i)
        CHECK(std::abs(angles[i] - angles[i - 1] - pi / 4) < 1e-9);
}

TEST_CASE("off-axis pencil members still decompose") {
    Q2Decomposition dec = decompose_q2(2, 0.9, 0.2, 1e-9);
    CHECK(dec.points.size() == 3);
    CHECK(dec.residual < 1e-9);
}

TEST_CASE("an impossible tolerance is reported") {
    CHECK_THROWS_AS(decompose_q2(3, 0.0, 0.0, 1e-18), std::runtime_error);
}

TEST_CASE("apolar ideal structure verification at small size") {
    ApolarIdealReport r32 = verify_apolar_ideal_theorem(3, 2, 3);
    CHECK(r32.ok);
    // degree 4: harmonic layers of dimensions 9 and 5
    CHECK(r32.degrees[4].apolar_dim == 14);
    CHECK(r32.degrees[4].ideal_dim == 14);

    ApolarIdealReport r23 = verify_apolar_ideal_theorem(2, 3, 3);
    CHECK(r23.ok);

    ApolarIdealReport r31 = verify_apolar_ideal_theorem(3, 1, 3);
    CHECK(r31.ok);
    CHECK(r31.degrees[2].apolar_dim == 5);  // traceless quadrics
}

TEST_CASE("certificate json carries the stable schema fields") {
    BorderRankCertificate cert = certify_border_rank_q3(1);
    auto doc = cert.to_json();
    for (const char* key :
         {"s", "r", "generators", "checks", "assumed_theorems", "conclusion", "timings_ms"})
        CHECK(doc.contains(key));
    CHECK(doc["checks"].contains("apolar_membership"));
    CHECK(doc["checks"].contains("groebner_ok"));
    CHECK(doc["checks"].contains("leading_ideal_equals_Jd"));
    CHECK(doc["checks"].contains("saturated"));
    CHECK(doc["checks"].contains("hilbert_matches_h_r"));
    CHECK(doc["checks"].contains("catalecticant_rank"));
    CHECK(doc["conclusion"] == 3);
    CHECK_FALSE(cert.to_json(false).contains("timings_ms"));
}
