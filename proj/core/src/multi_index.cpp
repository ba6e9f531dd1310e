#include "apolab/multi_index.hpp"

#include "apolab/util.hpp"

namespace apolab {

mpz_class MultiIndex::factorial() const {
    mpz_class r = 1;
    for (unsigned x : exponents()) r *= factorial_mpz(x);
    return r;
}

mpz_class MultiIndex::falling_factorial(const MultiIndex& alpha) const {
    check_size(alpha);
    mpz_class r = 1;
    for (std::size_t i = 0; i < size(); ++i) {
        unsigned b = (*this)[i], a = alpha[i];
        if (a > b) throw std::invalid_argument("falling factorial requires alpha <= beta");
        for (unsigned t = 0; t < a; ++t) r *= static_cast<long>(b - t);
    }
    return r;
}

namespace {

void enumerate(std::size_t nvars, unsigned degree, std::size_t pos, MultiIndex& cur,
               std::vector<MultiIndex>& out) {
    if (pos + 1 == nvars) {
        cur[pos] = degree;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    // descending exponent on the most significant remaining variable
    for (unsigned e = degree + 1; e-- > 0;) {
        cur[pos] = e;
        enumerate(nvars, degree - e, pos + 1, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_of_degree(std::size_t nvars, unsigned degree) {
    if (nvars == 0) throw std::invalid_argument("monomials_of_degree: nvars must be positive");
    std::vector<MultiIndex> out;
    MultiIndex cur(nvars);
    enumerate(nvars, degree, 0, cur, out);
    return out;
}

MonomialBasis::MonomialBasis(std::size_t nvars, unsigned degree)
    : monomials_(monomials_of_degree(nvars, degree)) {
    for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
}

std::size_t MonomialBasis::index_of(const MultiIndex& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("monomial not in this graded basis");
    return it->second;
}

}  // namespace apolab
