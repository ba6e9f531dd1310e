#include "apolab/harmonic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "apolab/util.hpp"

namespace apolab {

Poly laplacian(const Poly& f) {
    if (f.frame().kind() == FrameKind::UVZ) {
        // storage order (z, u, v)
        return f.derivative(0).derivative(0) + f.derivative(1).derivative(2);
    }
    Poly out(f.frame());
    for (std::size_t i = 0; i < f.frame().var_count(); ++i)
        out += f.derivative(i).derivative(i);
    return out;
}

long long harmonic_dim(int n, int d) {
    if (n < 1 || d < 0) throw std::invalid_argument("harmonic_dim: need n >= 1, d >= 0");
    long long full = binomial(static_cast<unsigned long>(d + n - 1), static_cast<unsigned long>(n - 1));
    if (d < 2) return full;
    return full - binomial(static_cast<unsigned long>(d + n - 3), static_cast<unsigned long>(n - 1));
}

std::vector<std::pair<unsigned, Poly>> harmonic_decompose(const Poly& f) {
    auto deg = f.homogeneous_degree();
    if (!deg && !f.is_zero())
        throw std::invalid_argument("harmonic_decompose: f must be homogeneous");
    const VariableFrame frame = f.frame();
    const std::size_t n = frame.var_count();
    const Poly q = frame_quadric(frame);

    std::vector<std::pair<unsigned, Poly>> parts;
    if (f.is_zero()) return parts;

    // Peel one harmonic layer at a time: writing f = h + q*g with h harmonic
    // is equivalent to the square linear system Lap(q*g) = Lap(f) in the
    // coefficients of g, which has a unique solution.
    Poly current = f;
    unsigned d = *deg;
    for (unsigned j = 0;; ++j) {
        unsigned cd = d - 2 * j;
        if (cd < 2) {
            parts.emplace_back(j, current);
            break;
        }
        MonomialBasis lower(n, cd - 2);
        ExactMatrix system(lower.size(), lower.size());
        for (std::size_t c = 0; c < lower.size(); ++c) {
            Poly image = laplacian(q * Poly::monomial(frame, lower[c]));
            for (const auto& [mono, coeff] : image.terms())
                system.at(lower.index_of(mono), c) = coeff;
        }
        Poly rhs = laplacian(current);
        std::vector<GaussianRational> b(lower.size());
        for (const auto& [mono, coeff] : rhs.terms()) b[lower.index_of(mono)] = coeff;
        auto sol = system.solve(b);
        if (!sol) throw std::logic_error("harmonic_decompose: projection system is singular");
        Poly g(frame);
        for (std::size_t c = 0; c < sol->size(); ++c)
            if (!(*sol)[c].is_zero()) g += Poly::monomial(frame, lower[c], (*sol)[c]);
        parts.emplace_back(j, current - q * g);
        current = std::move(g);
    }
    return parts;
}

std::vector<Poly> harmonic_space_basis(int n, unsigned d) {
    const VariableFrame dual = VariableFrame::y(n);
    if (d < 2) {
        std::vector<Poly> basis;
        for (const auto& mono : monomials_of_degree(static_cast<std::size_t>(n), d))
            basis.push_back(Poly::monomial(dual, mono));
        return basis;
    }
    MonomialBasis domain(static_cast<std::size_t>(n), d);
    MonomialBasis target(static_cast<std::size_t>(n), d - 2);
    ExactMatrix lap(target.size(), domain.size());
    for (std::size_t c = 0; c < domain.size(); ++c) {
        Poly image = laplacian(Poly::monomial(dual, domain[c]));
        for (const auto& [mono, coeff] : image.terms()) lap.at(target.index_of(mono), c) = coeff;
    }
    std::vector<Poly> basis;
    for (auto& vec : lap.kernel_basis()) {
        Poly h(dual);
        for (std::size_t c = 0; c < vec.size(); ++c)
            if (!vec[c].is_zero()) h += Poly::monomial(dual, domain[c], vec[c]);
        basis.push_back(std::move(h));
    }
    return basis;
}

const Poly& HarmonicBasis3::element(int weight) const {
    int idx = static_cast<int>(d) - weight;
    if (idx < 0 || idx >= static_cast<int>(elements.size()))
        throw std::out_of_range("harmonic basis weight out of range");
    return elements[static_cast<std::size_t>(idx)];
}

namespace {

// sum_j (-1)^j u^[k+j] z^[d-k-2j] v^[j], with u <-> v swapped for negative
// weights; [m] denotes the divided power, stored expanded as 1/m! times the
// ordinary power.
Poly ladder_element(unsigned d, int k) {
    const VariableFrame frame = VariableFrame::uvz();
    const unsigned a = static_cast<unsigned>(k >= 0 ? k : -k);
    const bool swap_uv = k < 0;
    Poly p(frame);
    for (unsigned j = 0; 2 * j <= d - a; ++j) {
        unsigned eu = a + j, ez = d - a - 2 * j, ev = j;
        if (swap_uv) std::swap(eu, ev);
        Rational c(mpz_class((j % 2 == 0) ? 1 : -1),
                   factorial_mpz(eu) * factorial_mpz(ez) * factorial_mpz(ev));
        p += Poly::monomial(frame, MultiIndex{ez, eu, ev}, GaussianRational(c));
    }
    return p;
}

}  // namespace

const HarmonicBasis3& harmonic_basis_3(unsigned d) {
    static std::mutex mutex;
    static std::map<unsigned, HarmonicBasis3> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    HarmonicBasis3 basis;
    basis.d = d;
    for (int k = static_cast<int>(d); k >= -static_cast<int>(d); --k)
        basis.elements.push_back(ladder_element(d, k));
    return cache.emplace(d, std::move(basis)).first->second;
}

namespace {

ExactMatrix matrix3(std::initializer_list<GaussianRational> entries) {
    ExactMatrix m(3, 3);
    std::size_t i = 0;
    for (const auto& e : entries) {
        m.at(i / 3, i % 3) = e;
        ++i;
    }
    return m;
}

}  // namespace

So3Basis so3_basis_y() {
    const VariableFrame fr = VariableFrame::y(3);
    const GaussianRational I = GaussianRational::i();
    const GaussianRational O;
    ExactMatrix h = matrix3({O, GaussianRational(-2) * I, O,
                                 GaussianRational(2) * I, O, O,
                                 O, O, O});
    ExactMatrix e = matrix3({O, O, GaussianRational(-1),
                                 O, O, -I,
                                 GaussianRational(1), I, O});
    ExactMatrix f = matrix3({O, O, GaussianRational(1),
                                 O, O, -I,
                                 GaussianRational(-1), I, O});
    return So3Basis{fr, std::move(h), std::move(e), std::move(f)};
}

So3Basis so3_basis_uvz() {
    // In the (u, v, z) coordinate order the triple reads
    //   H = diag(2, -2, 0), E = [[0,0,-2],[0,0,0],[0,1,0]],
    //   F = [[0,0,0],[0,0,2],[-1,0,0]];
    // entries below are the same matrices permuted to the storage order
    // (z, u, v).
    const VariableFrame fr = VariableFrame::uvz();
    const GaussianRational O;
    ExactMatrix h = matrix3({O, O, O,
                                 O, GaussianRational(2), O,
                                 O, O, GaussianRational(-2)});
    ExactMatrix e = matrix3({O, O, GaussianRational(1),
                                 GaussianRational(-2), O, O,
                                 O, O, O});
    ExactMatrix f = matrix3({O, GaussianRational(-1), O,
                                 O, O, O,
                                 GaussianRational(2), O, O});
    return So3Basis{fr, std::move(h), std::move(e), std::move(f)};
}

Poly so3_action(const ExactMatrix& m, const Poly& f) {
    const std::size_t n = f.frame().var_count();
    if (m.rows() != n || m.cols() != n)
        throw std::invalid_argument("so3_action: matrix shape must match frame arity");
    Poly out(f.frame());
    for (std::size_t k = 0; k < n; ++k) {
        Poly image(f.frame());
        for (std::size_t l = 0; l < n; ++l)
            if (!m.at(l, k).is_zero()) image += Poly::variable(f.frame(), l).scaled(m.at(l, k));
        if (!image.is_zero()) out += image * f.derivative(k);
    }
    return out;
}

std::vector<Poly> uvz_to_y_images() {
    const VariableFrame y = VariableFrame::y(3);
    const GaussianRational half(Rational(1, 2));
    const GaussianRational ihalf(Rational(0), Rational(1, 2));
    Poly u = Poly::variable(y, 0).scaled(half) + Poly::variable(y, 1).scaled(ihalf);
    Poly v = Poly::variable(y, 0).scaled(half) - Poly::variable(y, 1).scaled(ihalf);
    Poly z = Poly::variable(y, 2);
    // storage order of the uvz frame is (z, u, v)
    return {std::move(z), std::move(u), std::move(v)};
}

std::vector<Poly> y_to_uvz_images() {
    const VariableFrame uvz = VariableFrame::uvz();
    const GaussianRational I = GaussianRational::i();
    Poly u = Poly::variable(uvz, 1), v = Poly::variable(uvz, 2), z = Poly::variable(uvz, 0);
    Poly y1 = u + v;
    Poly y2 = v.scaled(I) - u.scaled(I);  // y2 = i(v - u)
    return {std::move(y1), std::move(y2), std::move(z)};
}

Poly uvz_to_y(const Poly& p) {
    if (p.frame() != VariableFrame::uvz()) throw std::invalid_argument("uvz_to_y: wrong frame");
    return change_frame(p, VariableFrame::y(3), uvz_to_y_images());
}

Poly y_to_uvz(const Poly& p) {
    if (p.frame() != VariableFrame::y(3)) throw std::invalid_argument("y_to_uvz: wrong frame");
    return change_frame(p, VariableFrame::uvz(), y_to_uvz_images());
}

Poly isotropic_linear_form(int n, bool conj) {
    if (n < 2) throw std::invalid_argument("isotropic form needs at least two variables");
    const VariableFrame y = VariableFrame::y(n);
    const GaussianRational I = GaussianRational::i();
    Poly p = Poly::variable(y, 0);
    if (conj)
        p -= Poly::variable(y, 1).scaled(I);
    else
        p += Poly::variable(y, 1).scaled(I);
    return p;
}

}  // namespace apolab
