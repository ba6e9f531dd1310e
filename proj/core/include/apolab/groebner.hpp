#pragma once

// Lex-order division with recorded quotients, the colon-ideal form of
// Buchberger's criterion, leading ideals, monomial-ideal arithmetic
// (colon, intersection, saturation), standard monomials and Hilbert
// functions of graded ideals.

#include <nlohmann/json.hpp>

#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "apolab/poly.hpp"

namespace apolab {

/// Lex-greatest monomial of f and its coefficient (order: the frame's
/// significance order, z > u > v in uvz coordinates). Throws on zero.
std::pair<MultiIndex, GaussianRational> lex_leading_term(const Poly& f);

struct QuotientStep {
    std::size_t generator;    // index into the divisor list
    MultiIndex monomial;      // monomial part of the quotient term
    GaussianRational coeff;   // coefficient part
};

struct ReductionResult {
    Poly remainder;
    std::vector<QuotientStep> steps;  // f = sum steps + remainder, exactly
};

/// Multivariate division of f by the ordered list G under lex order. No term
/// of the remainder is divisible by any leading term of G. Deterministic:
/// among divisors of the current lead term, the one with the lex-greatest
/// leading term is always chosen.
ReductionResult reduce(const Poly& f, const std::vector<Poly>& divisors);

/// Monomial ideal given by its unique minimal generating set.
class MonomialIdeal {
public:
    MonomialIdeal(VariableFrame frame, std::vector<MultiIndex> generators);

    static MonomialIdeal zero(VariableFrame frame) { return MonomialIdeal(frame, {}); }
    static MonomialIdeal unit(VariableFrame frame) {
        return MonomialIdeal(frame, {MultiIndex(frame.var_count())});
    }

    const VariableFrame& frame() const { return frame_; }
    const std::vector<MultiIndex>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_.front().is_constant(); }

    bool contains(const MultiIndex& m) const;

    /// J : m, generated by g / gcd(g, m) over generators g.
    MonomialIdeal colon(const MultiIndex& m) const;
    MonomialIdeal colon_var(std::size_t var) const;

    MonomialIdeal intersect(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.frame_ == b.frame_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

    /// Number of degree-a monomials outside the ideal.
    long long standard_monomial_count(unsigned degree) const;

    /// Closed form for the eventually-constant standard monomial count, when
    /// one variable is absent from every generator and the remaining
    /// variables are each bounded by some generator power (a finite
    /// staircase times a free line). Returns the constant value and the
    /// first degree where it holds.
    struct StableCount {
        long long value;
        unsigned from_degree;
    };
    std::optional<StableCount> stable_standard_count() const;

    std::vector<std::string> generator_strings() const;

private:
    VariableFrame frame_;
    std::vector<MultiIndex> gens_;
};

struct SaturationResult {
    MonomialIdeal ideal;
    unsigned iterations;  // passes of J -> intersection of J : variable
};

/// Saturation with respect to the irrelevant maximal ideal, by iterating
/// J -> intersect_v (J : v) until a fixed point.
SaturationResult monomial_saturation(const MonomialIdeal& j);
bool is_saturated(const MonomialIdeal& j);

/// Witness for one generator in the colon-ideal Buchberger check.
struct ColonCheckStep {
    std::size_t j;  // 1-based generator position (checks start at the second)
    std::vector<MultiIndex> colon_generators;
    struct Reduction {
        MultiIndex multiplier;
        ReductionResult result;
        bool reduced_to_zero;
    };
    std::vector<Reduction> reductions;
};

struct BuchbergerWitness {
    std::vector<Poly> generators;  // in the order they were checked
    bool ok = false;
    std::vector<ColonCheckStep> steps;

    nlohmann::ordered_json to_json() const;
};

/// Colon-ideal form of Buchberger's criterion: for each generator after the
/// first, every minimal generator x^a of
/// (LT(f_1),...,LT(f_{j-1})) : (LT(f_j)) must reduce x^a f_j to zero.
/// Returns ok = true exactly when the ordered list is a Groebner basis.
BuchbergerWitness buchberger_colon_check(const std::vector<Poly>& generators);

/// Minimal monomial generators of the leading terms of a verified Groebner
/// basis. Throws if the witness did not verify.
MonomialIdeal leading_ideal(const BuchbergerWitness& witness);

/// Homogeneous ideal presented by generators, optionally carrying a verified
/// Groebner basis with its leading ideal, plus cached Hilbert values.
class GradedIdealPresentation {
public:
    explicit GradedIdealPresentation(std::vector<Poly> generators);

    const std::vector<Poly>& generators() const { return generators_; }
    const std::optional<std::vector<Poly>>& groebner_basis() const { return groebner_; }
    const std::optional<MonomialIdeal>& leading() const { return leading_; }
    const VariableFrame& frame() const { return frame_; }

    /// Runs the colon-criterion check on the given ordering and, on success,
    /// stores it as the Groebner basis together with its leading ideal.
    BuchbergerWitness establish_groebner(std::vector<Poly> ordered);

    /// Hilbert function of the quotient at degree a. Always computed from
    /// the exact rank of the degree-a multiples of the generators; when a
    /// Groebner basis is attached the standard-monomial count of the leading
    /// ideal is computed as well and the two values must agree.
    long long hilbert_function(unsigned a) const;

private:
    VariableFrame frame_;
    std::vector<Poly> generators_;
    std::optional<std::vector<Poly>> groebner_;
    std::optional<MonomialIdeal> leading_;
    mutable std::map<unsigned, long long> hilbert_cache_;
    std::unique_ptr<std::mutex> cache_mutex_ = std::make_unique<std::mutex>();
};

}  // namespace apolab
