#pragma once

// Contraction action of dual forms on forms, catalecticant matrices with
// exact ranks, graded apolar-ideal components, and the classical catalecticant
// lower bound for rank and border rank.

#include <cstdint>
#include <vector>

#include "apolab/matrix.hpp"
#include "apolab/poly.hpp"

namespace apolab {

/// Contraction phi o f for phi in the y-frame and f in the x-frame. On
/// monomials y^a o x^b = b!/(b-a)! x^(b-a) when b-a >= 0 and 0 otherwise,
/// extended bilinearly. Iterated contraction composes:
/// (phi*psi) o f = phi o (psi o f).
Poly contract(const Poly& phi, const Poly& f);

/// Graded piece of the catalecticant map of a degree-d form f: columns are
/// indexed by degree-j dual monomials, rows by degree-(d-j) monomials, both
/// in descending lexicographic order. Entry (row b', col a) is the
/// coefficient of x^b' in y^a o f.
struct Catalecticant {
    Poly f;
    unsigned j = 0;
    MonomialBasis row_monomials;
    MonomialBasis col_monomials;
    ExactMatrix matrix;
    std::size_t rank = 0;
};

Catalecticant catalecticant(const Poly& f, unsigned j);

/// Degree-m graded piece of the apolar ideal of f: an exact basis of the
/// kernel of the m-th catalecticant, as y-frame polynomials.
struct ApolarComponent {
    Poly f;
    unsigned m = 0;
    std::vector<Poly> basis;
    std::size_t dim = 0;
};

ApolarComponent apolar_component(const Poly& f, unsigned m);

/// max_j rank(Cat_f^j): a lower bound for both the rank and the border rank
/// of f.
std::size_t sylvester_lower_bound(const Poly& f);

/// (I - S)(I + S)^{-1} for skew-symmetric S; the result is an exact rational
/// orthogonal matrix. Throws if I + S is singular (never for 3x3 rational
/// skew matrices).
ExactMatrix cayley_orthogonal(const ExactMatrix& skew);

/// Randomized check that the catalecticant of f commutes with a matrix A
/// stabilizing f: contract(A.phi, f) == A.(contract(phi, f)) on sampled phi.
/// Intended for orthogonal A (Cayley transforms, +-I). Throws
/// std::invalid_argument if A does not fix f, since the check would be
/// vacuous.
bool is_equivariant_spotcheck(const Poly& f, const ExactMatrix& a, unsigned samples = 8,
                              std::uint64_t seed = 20260810u);

}  // namespace apolab
