#pragma once

// Exponent multi-indices and monomial enumeration. The entry order of a
// multi-index follows the owning frame's significance order (most significant
// variable first), so plain lexicographic comparison of the exponent vector
// realizes the frame's monomial order.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apolab {

class MultiIndex {
public:
    explicit MultiIndex(std::size_t nvars) : e_(nvars, 0) {}
    MultiIndex(std::initializer_list<unsigned> e) : e_(e) {}
    explicit MultiIndex(std::vector<unsigned> e) : e_(std::move(e)) {}

    std::size_t size() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    unsigned& operator[](std::size_t i) { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const {
        unsigned d = 0;
        for (unsigned x : e_) d += x;
        return d;
    }

    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

    /// Pure lexicographic order on the stored (significance) order.
    static bool lex_less(const MultiIndex& a, const MultiIndex& b) {
        return a.e_ < b.e_;
    }

    /// Graded-lex: compare by total degree first, then lexicographically.
    /// This is the canonical term order used for term maps and printing.
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }

    MultiIndex operator+(const MultiIndex& o) const {
        check_size(o);
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        return r;
    }

    /// Componentwise subtraction, defined only when the result is >= 0.
    std::optional<MultiIndex> checked_sub(const MultiIndex& o) const {
        check_size(o);
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] < o.e_[i]) return std::nullopt;
            r.e_[i] -= o.e_[i];
        }
        return r;
    }

    bool divides(const MultiIndex& m) const {
        check_size(m);
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    MultiIndex lcm(const MultiIndex& o) const {
        check_size(o);
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
        return r;
    }

    MultiIndex gcd(const MultiIndex& o) const {
        check_size(o);
        MultiIndex r = *this;
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
        return r;
    }

    /// The factorial weight delta! = prod_i delta_i!.
    mpz_class factorial() const;

    /// beta!/(beta-alpha)! as a product of falling factorials; requires
    /// alpha <= beta componentwise (beta = *this).
    mpz_class falling_factorial(const MultiIndex& alpha) const;

private:
    void check_size(const MultiIndex& o) const {
        if (e_.size() != o.e_.size())
            throw std::invalid_argument("multi-index arity mismatch");
    }

    std::vector<unsigned> e_;
};

/// All monomials of the given total degree in `nvars` variables, listed in
/// descending lexicographic order (most significant variable first).
std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned degree);

/// Indexed monomial basis of one graded piece; fixes row/column orders of
/// matrices bit-exactly.
class MonomialBasis {
public:
    MonomialBasis(std::size_t nvars, unsigned degree);

    std::size_t size() const { return monomials_.size(); }
    const std::vector<MultiIndex>& monomials() const { return monomials_; }
    const MultiIndex& operator[](std::size_t i) const { return monomials_[i]; }
    std::size_t index_of(const MultiIndex& m) const;

private:
    std::vector<MultiIndex> monomials_;
    std::map<MultiIndex, std::size_t> index_;
};

}  // namespace apolab
