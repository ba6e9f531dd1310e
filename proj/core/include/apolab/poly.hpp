#pragma once

// Sparse multivariate polynomials over the Gaussian rationals, tagged with a
// variable frame. Terms are kept in a sorted map under the canonical
// graded-lex order of the frame; no zero coefficients are ever stored.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apolab/frame.hpp"
#include "apolab/multi_index.hpp"
#include "apolab/scalars.hpp"

namespace apolab {

class ExactMatrix;

class Poly {
public:
    using TermMap = std::map<MultiIndex, GaussianRational>;

    explicit Poly(VariableFrame frame) : frame_(frame) {}
    Poly(VariableFrame frame, TermMap terms);

    static Poly constant(VariableFrame frame, GaussianRational c);
    static Poly variable(VariableFrame frame, std::size_t storage_index);
    static Poly monomial(VariableFrame frame, MultiIndex m, GaussianRational c = GaussianRational(1));

    const VariableFrame& frame() const { return frame_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Largest total degree among terms; zero polynomial reports 0.
    unsigned total_degree() const;

    /// Shared degree of all terms, or nullopt if terms mix degrees or the
    /// polynomial is zero.
    std::optional<unsigned> homogeneous_degree() const;

    GaussianRational coeff(const MultiIndex& m) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const GaussianRational& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.frame_ == b.frame_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative(std::size_t var) const;

    GaussianRational evaluate(const std::vector<GaussianRational>& point) const;

    /// Coefficients over a full graded monomial basis; every term of the
    /// polynomial must live in that graded piece.
    std::vector<GaussianRational> coefficient_row(const MonomialBasis& basis) const;

    /// Canonical text form; parseable by parse_poly and stable across runs.
    std::string to_string() const;

private:
    void add_term(const MultiIndex& m, const GaussianRational& c);

    VariableFrame frame_;
    TermMap terms_;

    friend Poly change_frame(const Poly&, const VariableFrame&, const std::vector<Poly>&);
};

/// Ring homomorphism determined by an invertible linear substitution: the
/// source variable at storage index i is replaced by images[i], which must be
/// homogeneous of degree 1 in the target frame.
Poly change_frame(const Poly& p, const VariableFrame& target, const std::vector<Poly>& images);

/// Linear substitution inside one frame: variable k picks up the linear form
/// with coefficients in column k of A.
Poly apply_linear(const ExactMatrix& a, const Poly& p);

/// The invariant quadric of the frame: sum of squared variables for X/Y
/// coordinates, z^2 + 4uv in the uvz coordinates (its image under the frame
/// change).
Poly frame_quadric(const VariableFrame& frame);

/// frame_quadric(frame)^s.
Poly quadric_power(const VariableFrame& frame, unsigned s);

}  // namespace apolab
