#include "apolab/apolarity.hpp"

#include <random>
#include <stdexcept>

namespace apolab {

Poly contract(const Poly& phi, const Poly& f) {
    if (phi.frame().kind() != FrameKind::Y || f.frame().kind() != FrameKind::X)
        throw std::invalid_argument("contract: expected a y-frame operator and an x-frame form");
    if (phi.frame().var_count() != f.frame().var_count())
        throw std::invalid_argument("contract: variable count mismatch");
    Poly out(f.frame());
    for (const auto& [alpha, ca] : phi.terms()) {
        for (const auto& [beta, cb] : f.terms()) {
            auto diff = beta.checked_sub(alpha);
            if (!diff) continue;
            GaussianRational w(Rational(beta.falling_factorial(alpha)));
            out += Poly::monomial(f.frame(), *diff, ca * cb * w);
        }
    }
    return out;
}

Catalecticant catalecticant(const Poly& f, unsigned j) {
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("catalecticant: f must be homogeneous and nonzero");
    if (j > *d) throw std::invalid_argument("catalecticant: index out of range 0..deg f");
    if (f.frame().kind() != FrameKind::X)
        throw std::invalid_argument("catalecticant: f must live in the x-frame");
    const std::size_t n = f.frame().var_count();
    const VariableFrame dual = VariableFrame::y(static_cast<int>(n));

    MonomialBasis rows(n, *d - j);
    MonomialBasis cols(n, j);
    ExactMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Poly image = contract(Poly::monomial(dual, cols[c]), f);
        for (const auto& [mono, coeff] : image.terms()) m.at(rows.index_of(mono), c) = coeff;
    }
    std::size_t rank = m.rank();
    return Catalecticant{f, j, std::move(rows), std::move(cols), std::move(m), rank};
}

ApolarComponent apolar_component(const Poly& f, unsigned m) {
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("apolar_component: f must be homogeneous and nonzero");
    const std::size_t n = f.frame().var_count();
    const VariableFrame dual = VariableFrame::y(static_cast<int>(n));

    ApolarComponent out{f, m, {}, 0};
    if (m > *d) {
        // the catalecticant target is zero, so the whole graded piece is apolar
        for (const auto& mono : monomials_of_degree(n, m))
            out.basis.push_back(Poly::monomial(dual, mono));
        out.dim = out.basis.size();
        return out;
    }
    Catalecticant cat = catalecticant(f, m);
    for (auto& vec : cat.matrix.kernel_basis()) {
        Poly phi(dual);
        for (std::size_t c = 0; c < vec.size(); ++c)
            if (!vec[c].is_zero()) phi += Poly::monomial(dual, cat.col_monomials[c], vec[c]);
        out.basis.push_back(std::move(phi));
    }
    out.dim = out.basis.size();
    return out;
}

std::size_t sylvester_lower_bound(const Poly& f) {
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("sylvester_lower_bound: f must be homogeneous and nonzero");
    std::size_t best = 0;
    for (unsigned j = 0; j <= *d; ++j) best = std::max(best, catalecticant(f, j).rank);
    return best;
}

ExactMatrix cayley_orthogonal(const ExactMatrix& skew) {
    if (skew.rows() != skew.cols()) throw std::invalid_argument("cayley: matrix must be square");
    const std::size_t n = skew.rows();
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (skew.at(r, c) != -skew.at(c, r))
                throw std::invalid_argument("cayley: matrix must be skew-symmetric");
    ExactMatrix id = ExactMatrix::identity(n);
    auto inv = (id + skew).inverse();
    if (!inv) throw std::invalid_argument("cayley: I + S is singular");
    return (id - skew) * *inv;
}

namespace {

Poly random_dual_form(const VariableFrame& dual, unsigned degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    Poly phi(dual);
    for (const auto& mono : monomials_of_degree(dual.var_count(), degree)) {
        GaussianRational c(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
        phi += Poly::monomial(dual, mono, c);
    }
    return phi;
}

}  // namespace

bool is_equivariant_spotcheck(const Poly& f, const ExactMatrix& a, unsigned samples,
                              std::uint64_t seed) {
    auto d = f.homogeneous_degree();
    if (!d) throw std::invalid_argument("equivariance check: f must be homogeneous and nonzero");
    const std::size_t n = f.frame().var_count();
    if (a.rows() != n || a.cols() != n)
        throw std::invalid_argument("equivariance check: matrix shape mismatch");
    if (apply_linear(a, f) != f)
        throw std::invalid_argument("equivariance check: A does not stabilize f");

    const VariableFrame dual = VariableFrame::y(static_cast<int>(n));
    std::mt19937_64 rng(seed);
    for (unsigned t = 0; t < samples; ++t) {
        unsigned degree = 1 + t % std::min<unsigned>(*d, 3);
        Poly phi = random_dual_form(dual, degree, rng);
        Poly lhs = contract(apply_linear(a, phi), f);
        Poly rhs = apply_linear(a, contract(phi, f));
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace apolab
