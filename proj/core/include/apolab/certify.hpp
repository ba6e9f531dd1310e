#pragma once

// End-to-end certification pipeline: assembles the degree-(s+1) ladder ideal,
// checks apolar containment, the Groebner/leading-ideal/saturation/Hilbert
// conditions and the catalecticant lower bound, and emits a self-contained
// machine-checkable certificate of the border rank of (x1^2+x2^2+x3^2)^s.
// Also classifies arbitrary ternary quadratics and verifies the classical
// power-sum decompositions of (x1^2+x2^2)^s numerically.

#include <nlohmann/json.hpp>

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolab/groebner.hpp"
#include "apolab/matrix.hpp"
#include "apolab/poly.hpp"

namespace apolab {

/// The ideal generated by the nonnegative-weight half of the degree-d ladder
/// basis of ternary harmonics, generators listed from weight d down to 0
/// (d + 1 generators of degree d, uvz frame).
GradedIdealPresentation ladder_ideal(unsigned d);

/// (u, z)^d: the monomial ideal of all degree-d monomials in u and z inside
/// three variables; the expected leading ideal of the ladder ideal.
MonomialIdeal uz_power_ideal(unsigned d);

struct HilbertCheck {
    unsigned verified_to = 0;    // every degree 0..verified_to matched
    unsigned stable_from = 0;    // closed form: constant value for all a >= stable_from
    long long stable_value = 0;
    bool ok = false;
};

struct CertificateChecks {
    std::vector<bool> apolar_membership;  // one per generator
    bool groebner_ok = false;
    bool leading_ideal_equals_expected = false;
    bool saturated = false;
    unsigned saturation_iterations = 0;
    HilbertCheck hilbert;
    std::size_t catalecticant_rank = 0;
};

struct BorderRankCertificate {
    unsigned s = 0;
    unsigned r = 0;  // claimed border rank C(s+2, 2)
    unsigned generator_count = 0;
    std::vector<std::string> generators;
    CertificateChecks checks;
    std::vector<std::string> assumed_theorems;
    std::vector<std::string> notes;
    long long conclusion = 0;
    std::map<std::string, double> timings_ms;

    bool all_checks_pass() const;
    /// Deterministic JSON; timings are wall clock and can be excluded when
    /// comparing certificates byte for byte.
    nlohmann::ordered_json to_json(bool include_timings = true) const;
};

class CertificationError : public std::runtime_error {
public:
    CertificationError(std::string step, const std::string& message)
        : std::runtime_error("certification failed at step '" + step + "': " + message),
          step_(std::move(step)) {}

    const std::string& step() const { return step_; }

private:
    std::string step_;
};

/// Runs the full pipeline for (x1^2+x2^2+x3^2)^s and returns the certificate;
/// throws CertificationError on the first failing check.
BorderRankCertificate certify_border_rank_q3(unsigned s);

/// Certificates are self-contained: this re-runs every check from the data
/// recorded in the JSON (power and parsed generator strings) and reports
/// whether each recorded boolean and rank reproduces.
bool reverify_certificate(const nlohmann::ordered_json& doc);

/// Exact rank classification of a ternary quadratic with the border-rank
/// formula for its powers: C(s + rank - 1, rank - 1) in the degenerate cases,
/// C(s+2, 2) otherwise.
struct QuadraticClassification {
    Poly g;
    ExactMatrix gram;
    int matrix_rank = 0;

    long long brk(unsigned s) const;
    std::string formula() const;
};

QuadraticClassification classify_ternary_quadratic(const Poly& g);

/// Radius of the power-sum decompositions of (x1^2+x2^2)^s:
/// (s+1)^(-1/2s) * C(2s, s)^(-1/2s).
double q2_waring_radius(unsigned s);

/// The pencil of binary apolar generators u^(s+1) - e^(i(theta + i*k)) v^(s+1)
/// in the dual variables u = y1 + i y2, v = y1 - i y2. At theta = k = 0 the
/// exact y-frame expansion of u^(s+1) - v^(s+1) is included.
struct Q2ApolarGenerator {
    unsigned s = 0;
    double theta = 0, k = 0;
    std::complex<double> coeff_u_power;  // always 1
    std::complex<double> coeff_v_power;  // -e^(i(theta + i k))
    std::optional<Poly> exact;           // y-frame, only when theta = k = 0

    /// Root parameters w_j = (2(j-1)pi + theta + i k) / (2(s+1)).
    std::vector<std::complex<double>> root_parameters() const;
};

Q2ApolarGenerator q2_apolar_generator(unsigned s, double theta, double k);

/// s+1 projective points (2r cos w_j, 2r sin w_j) whose (2s)-th powers sum to
/// (x1^2+x2^2)^s, with the coefficientwise residual of that identity.
struct Q2Decomposition {
    unsigned s = 0;
    double theta = 0, k = 0;
    double radius = 0;
    std::vector<std::array<std::complex<double>, 2>> points;
    double residual = 0;
};

/// Throws std::runtime_error if the residual is not below tol.
Q2Decomposition decompose_q2(unsigned s, double theta, double k, double tol = 1e-9);

/// Degree-by-degree comparison of the apolar ideal of (sum x_i^2)^s with the
/// ideal generated by the degree-(s+1) harmonics: dimensions and exact
/// subspace equality for every degree m = 0 .. 2s + max_extra_degree.
struct DegreeComparison {
    unsigned m = 0;
    long long apolar_dim = 0;
    long long ideal_dim = 0;
    bool equal = false;
};

struct ApolarIdealReport {
    int n = 0;
    unsigned s = 0;
    std::vector<DegreeComparison> degrees;
    bool ok = false;
};

ApolarIdealReport verify_apolar_ideal_theorem(int n, unsigned s, unsigned max_extra_degree);

}  // namespace apolab
