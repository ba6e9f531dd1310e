#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace apolab {

/// Exact binomial coefficient C(n, k).
inline mpz_class binomial_mpz(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Binomial coefficient as a machine integer; throws if it does not fit.
inline long long binomial(unsigned long n, unsigned long k) {
    mpz_class r = binomial_mpz(n, k);
    if (!r.fits_slong_p())
        throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") does not fit in a machine integer");
    return r.get_si();
}

inline mpz_class factorial_mpz(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace apolab
