#pragma once

// Laplace operators, harmonic dimensions and decompositions, the canonical
// weight-ladder basis of ternary harmonics, and the so3 operator triple
// acting on polynomials by derivations.

#include <utility>
#include <vector>

#include "apolab/matrix.hpp"
#include "apolab/poly.hpp"

namespace apolab {

/// Laplace operator in the frame's own coordinates: sum of second partials
/// for x/y frames, d^2/dz^2 + d^2/du dv for the uvz frame.
Poly laplacian(const Poly& f);

/// dim of the space of degree-d harmonic forms in n variables:
/// C(d+n-1, n-1) - C(d+n-3, n-1), the second term dropped for d < 2.
long long harmonic_dim(int n, int d);

/// Unique decomposition f = sum_j q^j h_j with each h_j harmonic of degree
/// d - 2j, where q is the frame quadric. Returns all j = 0..floor(d/2),
/// including zero components.
std::vector<std::pair<unsigned, Poly>> harmonic_decompose(const Poly& f);

/// Basis of degree-d harmonics in n variables (y-frame): exact kernel of the
/// Laplacian on the degree-d graded piece.
std::vector<Poly> harmonic_space_basis(int n, unsigned d);

/// The canonical basis of ternary degree-d harmonics in uvz coordinates,
/// indexed by weight k = d, d-1, ..., 0, ..., -d. Elements are stored with
/// ordinary expanded coefficients (divided powers are a notation only); the
/// weight-k leading term under lex z > u > v is u^k z^(d-k) / (k! (d-k)!).
struct HarmonicBasis3 {
    unsigned d = 0;
    std::vector<Poly> elements;  // elements[i] has weight d - i

    const Poly& element(int weight) const;
};

/// Cached constructor for HarmonicBasis3; safe for concurrent callers.
const HarmonicBasis3& harmonic_basis_3(unsigned d);

/// An sl2-triple of 3x3 matrices in a declared frame, satisfying
/// [H,E] = 2E, [H,F] = -2F, [E,F] = H exactly. Matrix entries follow the
/// frame's storage order.
struct So3Basis {
    VariableFrame frame;
    ExactMatrix h, e, f;
};

So3Basis so3_basis_y();
So3Basis so3_basis_uvz();

/// Lie-algebra derivation action: M.f = sum_k (image of variable k) * df/dk,
/// where variable k maps to the linear form in column k of M. Satisfies
/// [M1,M2].f = M1.(M2.f) - M2.(M1.f).
Poly so3_action(const ExactMatrix& m, const Poly& f);

/// The degree-1 images of the uvz -> y change of coordinates
/// u = (y1 + i y2)/2, v = (y1 - i y2)/2, z = y3, and its inverse.
std::vector<Poly> uvz_to_y_images();
std::vector<Poly> y_to_uvz_images();
Poly uvz_to_y(const Poly& p);
Poly y_to_uvz(const Poly& p);

/// The isotropic linear forms y1 + i y2 (conj = false) and y1 - i y2
/// (conj = true) in n >= 2 dual variables; their powers are harmonic.
Poly isotropic_linear_form(int n, bool conj);

}  // namespace apolab
